#include "binmat/cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "binmat/catalog.hpp"
#include "binmat/classify.hpp"
#include "binmat/connectivity.hpp"
#include "binmat/error.hpp"
#include "binmat/harness.hpp"
#include "binmat/io.hpp"
#include "binmat/isomorphism.hpp"
#include "binmat/regularity.hpp"
#include "binmat/structure.hpp"

namespace binmat::cli {

namespace {

/// Catalog names win over file paths.
NamedMatroid load(const std::string& source) {
  if (catalog::contains(source)) return {source, catalog::get(source)};
  return read_bm_file(source);
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<std::string> flatten_labels(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    for (auto& l : split_labels(a)) out.push_back(std::move(l));
  }
  return out;
}

std::string join(const std::vector<std::string>& v, std::string_view sep = " ") {
  std::string s;
  for (const auto& x : v) {
    if (!s.empty()) s += sep;
    s += x;
  }
  return s;
}

std::string dual_name(const std::string& name) {
  if (!name.empty() && name.back() == '*') return name.substr(0, name.size() - 1);
  return name + "*";
}

int info(const NamedMatroid& nm, std::ostream& out) {
  const Matroid& m = nm.matroid;
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  out << "name " << nm.name << '\n';
  out << "size " << m.size() << '\n';
  out << "rank " << m.rank() << '\n';
  const bool three = is_3connected(m);
  out << "3-connected " << yes_no(three) << '\n';
  if (m.size() <= 16) {
    out << "internally-4-connected " << yes_no(three && is_internally_4connected(m)) << '\n';
  }
  const auto report = regularity_report(m);
  out << "regular " << yes_no(report.is_regular) << '\n';
  if (!report.is_regular) {
    out << "excluded-minor " << is_regular(m).excluded_minor << '\n';
    out << "regular-elements " << report.regular_elements.size() << '\n';
    out << "R " << join(m.labels_of(report.regular_elements)) << '\n';
  }
  return kOk;
}

void print_separations(const Matroid& m, std::size_t k, bool exact, std::ostream& out) {
  const auto seps = separations(m, k, exact);
  out << "count " << seps.size() << '\n';
  for (const auto& s : seps) {
    out << "lambda " << s.order;
    if (s.exact) out << " exact";
    if (s.minimal) out << " minimal";
    out << " : " << join(m.labels_of(s.side1)) << " | " << join(m.labels_of(s.side2)) << '\n';
  }
}

int decompose(const NamedMatroid& nm, const std::vector<std::string>& side, std::ostream& out) {
  const Matroid& m = nm.matroid;
  Separation sep;
  sep.side1 = m.subset(side);
  sep.side2 = m.ground() - sep.side1;
  sep.order = connectivity(m, sep.side1);
  sep.exact = sep.order == 2;
  int tag = 1;
  while (m.find("t1#" + std::to_string(tag)) || m.find("t2#" + std::to_string(tag)) ||
         m.find("t3#" + std::to_string(tag))) {
    ++tag;
  }
  const ThreeSumParts parts = decompose_3sep(m, sep, tag);
  out << "glue " << join({parts.triangle.begin(), parts.triangle.end()}) << '\n';
  write_bm(out, nm.name + ".1", parts.first);
  write_bm(out, nm.name + ".2", parts.second);
  return kOk;
}

int verify(const std::string& suite, std::size_t n, bool records, std::ostream& out,
           std::ostream& err) {
  CheckReport report;
  if (suite == "lemma3.1") {
    report = check_regular_count(n);
  } else if (suite == "theorem1.1") {
    report = check_two_regular_characterization(n);
  } else {
    report = check_catalog_facts();
  }
  if (records) {
    write_records(out, report);
  } else {
    write_summary(out, report);
  }
  err << "elapsed " << report.elapsed.count() << "s\n";
  return report.passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary matroid toolkit: regular elements, 3-sums and exhaustive checks", "binmat"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string a, b, target, triangle, sep_labels, suite, what, name;
  std::vector<std::string> labels;
  std::size_t k = 3, n = 9;
  bool exact = false, strict = false, records = false;

  auto* info_cmd = app.add_subcommand("info", "Rank, size, connectivity and regular elements");
  info_cmd->add_option("matroid", a, "file or catalog name")->required();
  info_cmd->callback([&] { action = [&] { return info(load(a), out); }; });

  auto* dual_cmd = app.add_subcommand("dual", "Print the dual");
  dual_cmd->add_option("matroid", a)->required();
  dual_cmd->callback([&] {
    action = [&] {
      const auto nm = load(a);
      write_bm(out, dual_name(nm.name), dual(nm.matroid));
      return kOk;
    };
  });

  auto* delete_cmd = app.add_subcommand("delete", "Delete elements");
  delete_cmd->add_option("matroid", a)->required();
  delete_cmd->add_option("labels", labels, "labels, separated by spaces or commas")->required();
  delete_cmd->callback([&] {
    action = [&] {
      const auto nm = load(a);
      const auto x = flatten_labels(labels);
      write_bm(out, nm.name + "\\" + join(x, ","), delete_elements(nm.matroid, nm.matroid.subset(x)));
      return kOk;
    };
  });

  auto* contract_cmd = app.add_subcommand("contract", "Contract elements");
  contract_cmd->add_option("matroid", a)->required();
  contract_cmd->add_option("labels", labels)->required();
  contract_cmd->callback([&] {
    action = [&] {
      const auto nm = load(a);
      const auto x = flatten_labels(labels);
      write_bm(out, nm.name + "/" + join(x, ","), contract_elements(nm.matroid, nm.matroid.subset(x)));
      return kOk;
    };
  });

  auto* simplify_cmd = app.add_subcommand("simplify", "Remove loops and parallel elements");
  simplify_cmd->add_option("matroid", a)->required();
  simplify_cmd->callback([&] {
    action = [&] {
      const auto nm = load(a);
      const auto red = simplify(nm.matroid);
      for (const auto& r : red.removed) {
        out << "removed " << r.removed;
        if (r.partner) out << " parallel-to " << *r.partner;
        else out << " loop";
        out << '\n';
      }
      write_bm(out, "si(" + nm.name + ")", red.matroid);
      return kOk;
    };
  });

  auto* minor_cmd = app.add_subcommand("minor", "Search for a minor; exit 1 when absent");
  minor_cmd->add_option("matroid", a)->required();
  minor_cmd->add_option("target", target)->required();
  minor_cmd->callback([&] {
    action = [&] {
      const auto m = load(a);
      const auto t = load(target);
      const auto w = has_minor(m.matroid, t.matroid);
      if (!w) {
        out << "no minor\n";
        return kCheckFailed;
      }
      out << "minor\n";
      out << "delete " << join(w->deleted) << '\n';
      out << "contract " << join(w->contracted) << '\n';
      return kOk;
    };
  });

  auto* iso_cmd = app.add_subcommand("iso", "Test isomorphism; exit 1 when not isomorphic");
  iso_cmd->add_option("a", a)->required();
  iso_cmd->add_option("b", b)->required();
  iso_cmd->callback([&] {
    action = [&] {
      const auto x = load(a);
      const auto y = load(b);
      const auto map = is_isomorphic(x.matroid, y.matroid);
      if (!map) {
        out << "not isomorphic\n";
        return kCheckFailed;
      }
      out << "isomorphic\n";
      for (std::size_t i = 0; i < map->image.size(); ++i) {
        out << x.matroid.label(i) << " -> " << y.matroid.label(map->image[i]) << '\n';
      }
      return kOk;
    };
  });

  auto* sep_cmd = app.add_subcommand("separations", "List j-separations (at most 16 elements)");
  sep_cmd->add_option("matroid", a)->required();
  sep_cmd->add_option("-k", k, "j")->required()->check(CLI::Range(1, 16));
  sep_cmd->add_flag("--exact", exact, "only exact separations");
  sep_cmd->callback([&] {
    action = [&] {
      print_separations(load(a).matroid, k, exact, out);
      return kOk;
    };
  });

  auto* sum_cmd = app.add_subcommand("threesum", "3-sum along the shared triangle");
  sum_cmd->add_option("a", a)->required();
  sum_cmd->add_option("b", b)->required();
  sum_cmd->add_flag("--strict", strict, "the triangle may contain no cocircuit of either part");
  sum_cmd->callback([&] {
    action = [&] {
      const auto x = load(a);
      const auto y = load(b);
      write_bm(out, x.name + "+" + y.name, three_sum(x.matroid, y.matroid, strict));
      return kOk;
    };
  });

  auto* dy_cmd = app.add_subcommand("deltay", "Replace a triangle by a triad");
  dy_cmd->add_option("matroid", a)->required();
  dy_cmd->add_option("-T", triangle, "triangle labels a,b,c")->required();
  dy_cmd->callback([&] {
    action = [&] {
      const auto nm = load(a);
      write_bm(out, nm.name + ".dy", delta_y(nm.matroid, nm.matroid.subset(split_labels(triangle))));
      return kOk;
    };
  });

  auto* dec_cmd = app.add_subcommand("decompose", "Split along an exact 3-separation");
  dec_cmd->add_option("matroid", a)->required();
  dec_cmd->add_option("--sep", sep_labels, "labels of one side, comma separated")->required();
  dec_cmd->callback([&] { action = [&] { return decompose(load(a), split_labels(sep_labels), out); }; });

  auto* cls_cmd = app.add_subcommand("classify", "Decide the structure of a 3-connected matroid");
  cls_cmd->add_option("matroid", a)->required();
  cls_cmd->callback([&] {
    action = [&] {
      out << to_report(classify(load(a).matroid));
      return kOk;
    };
  });

  auto* cat_cmd = app.add_subcommand("catalog", "List or print catalog matroids");
  cat_cmd->add_option("action", what)->required()->check(CLI::IsMember({"list", "show"}));
  cat_cmd->add_option("name", name);
  cat_cmd->callback([&] {
    action = [&] {
      if (what == "list") {
        for (const auto& entry_name : catalog::names()) {
          const Matroid& m = catalog::get(entry_name);
          out << entry_name << ' ' << m.size() << ' ' << m.rank() << '\n';
        }
        return kOk;
      }
      if (name.empty()) throw CLI::ValidationError("catalog show", "needs a name");
      write_bm(out, name, catalog::get(name));
      return kOk;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite; exit 1 on failure");
  verify_cmd->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"lemma3.1", "theorem1.1", "catalog"}));
  verify_cmd->add_option("-n", n, "ground-set size")->check(CLI::Range(4, 10));
  verify_cmd->add_flag("--records", records, "print one JSON record per assertion");
  verify_cmd->callback([&] { action = [&] { return verify(suite, n, records, out, err); }; });

  std::vector<const char*> argv{"binmat"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const MatroidError& e) {
    err << "error " << e.name() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "error " << e.get_name() << ": " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace binmat::cli
