#include "binmat/harness.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "binmat/catalog.hpp"
#include "binmat/connectivity.hpp"
#include "binmat/error.hpp"
#include "binmat/io.hpp"
#include "binmat/isomorphism.hpp"
#include "binmat/regularity.hpp"
#include "binmat/structure.hpp"

namespace binmat {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Isomorphism classes, bucketed by fingerprint.
class ClassSet {
 public:
  explicit ClassSet(bool dedupe) : dedupe_(dedupe) {}

  bool add(const Matroid& m) {
    if (dedupe_) {
      auto& bucket = buckets_[fingerprint(m)];
      for (std::size_t i : bucket) {
        if (is_isomorphic(members_[i], m)) return false;
      }
      bucket.push_back(members_.size());
    }
    members_.push_back(m);
    return true;
  }

  const std::vector<Matroid>& members() const { return members_; }

 private:
  bool dedupe_;
  std::map<MatroidFingerprint, std::vector<std::size_t>> buckets_;
  std::vector<Matroid> members_;
};

// Matroids given by n-subsets of the nonzero vectors of GF(2)^r that span.
std::vector<Matroid> scan_rank(std::size_t n, std::size_t r, bool require_3connected, bool dedupe) {
  ClassSet classes(dedupe);
  const std::size_t points = (std::size_t{1} << r) - 1;
  if (n > points) return {};
  const auto labels = numbered(n);
  for_each_subset_of_size(ElementSet::first(points), n, [&](ElementSet s) {
    std::vector<std::uint64_t> cols;
    for (auto p : s) cols.push_back(p + 1);
    if (span_rank(cols) != r) return;
    Matroid m = Matroid::from_columns(labels, cols);
    if (require_3connected && !is_3connected(m)) return;
    classes.add(m);
  });
  return classes.members();
}

// Rank 5 on 10 elements, built from the 9-element rank-5 classes.
std::vector<Matroid> rank5_on_10(bool dedupe) {
  ClassSet classes(dedupe);
  const auto labels = numbered(10);
  auto add = [&](const Matroid& m) {
    if (is_3connected(m)) classes.add(relabel(m, labels));
  };
  add(wheel(5));
  EnumerationSpec nine{9, {5}, true, true};
  for (const auto& base : enumerate(nine)) {
    for (const auto& ext : single_element_extensions(base.matroid, true)) {
      add(ext);
      add(dual(ext));
    }
  }
  return classes.members();
}

}  // namespace

std::vector<Instance> enumerate(const EnumerationSpec& spec) {
  const std::size_t n = spec.n;
  if (n > 10) throw MatroidError(ErrorCode::kTooLarge, "enumeration is limited to 10 elements");
  if (n < 4) throw MatroidError(ErrorCode::kInvalidArgument, "enumeration needs at least 4 elements");
  std::vector<std::size_t> ranks = spec.ranks;
  if (ranks.empty()) {
    for (std::size_t r = 1; r < n; ++r) ranks.push_back(r);
  }
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());

  std::vector<Instance> out;
  for (std::size_t r : ranks) {
    std::vector<Matroid> found;
    if (r == 0 || r >= n) {
      // no simple 3-connected matroid of this rank
    } else if (2 * r < n || (2 * r == n && n < 10)) {
      found = scan_rank(n, r, spec.require_3connected, spec.dedupe);
    } else if (!spec.require_3connected) {
      throw MatroidError(ErrorCode::kInvalidArgument,
                         "ranks above n/2 are only enumerated for 3-connected matroids");
    } else if (2 * r == n) {
      found = rank5_on_10(spec.dedupe);
    } else {
      for (const auto& m : scan_rank(n, n - r, true, spec.dedupe)) found.push_back(dual(m));
    }
    for (std::size_t k = 0; k < found.size(); ++k) {
      out.push_back({"n" + std::to_string(n) + "-r" + std::to_string(r) + "-" + std::to_string(k + 1),
                     std::move(found[k])});
    }
  }
  return out;
}

std::vector<Instance> enumerate_3connected(std::size_t n) {
  return enumerate(EnumerationSpec{n, {}, true, true});
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { report_.name = std::move(name); }

  bool expect(bool ok, const std::string& instance, const Matroid& m, const std::string& assertion) {
    report_.records.push_back({report_.name, instance, assertion, ok});
    if (!ok) report_.failures.push_back({instance, to_bm(instance, m), assertion});
    return ok;
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  void count() { ++report_.instances; }

  CheckReport finish(std::chrono::steady_clock::time_point start) {
    report_.elapsed = std::chrono::steady_clock::now() - start;
    return std::move(report_);
  }

 private:
  CheckReport report_;
};

std::string histogram(const std::map<std::size_t, std::size_t>& counts) {
  std::string s;
  for (const auto& [k, v] : counts) {
    s += (s.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
  }
  return s.empty() ? "none" : s;
}

}  // namespace

CheckReport check_regular_count(std::size_t n) {
  if (n != 9 && n != 10) {
    throw MatroidError(ErrorCode::kInvalidArgument, "regular-count check runs at n = 9 or 10");
  }
  const auto start = std::chrono::steady_clock::now();
  Recorder rec("lemma3.1");
  const Matroid& p9 = catalog::get("P9");
  const Matroid& p9_dual = catalog::get("P9*");
  std::map<std::size_t, std::size_t> sizes;
  std::size_t classes = 0;
  for (const auto& inst : enumerate_3connected(n)) {
    ++classes;
    const Matroid& m = inst.matroid;
    if (is_regular(m).regular) continue;
    rec.count();
    const ElementSet r = regular_elements(m);
    ++sizes[r.size()];
    const std::size_t k = r.size();
    rec.expect(k == 0 || k == 1 || k == 2 || k == 4, inst.id, m, "|R| in {0,1,2,4}");
    if (k == 4) {
      rec.expect(is_circuit(m, r) && is_cocircuit(m, r), inst.id, m, "R is a circuit and a cocircuit");
    }
    const bool minor = has_minor(m, p9).has_value() || has_minor(m, p9_dual).has_value();
    rec.expect(minor, inst.id, m, "has a P9 or P9* minor");
  }
  rec.note("3-connected classes: " + std::to_string(classes));
  rec.note("|R| histogram: " + histogram(sizes));
  rec.note("the P9/P9* minor premise is only exercised at n = 9 and 10");
  return rec.finish(start);
}

Matroid three_sum_along(const Matroid& core, const std::vector<std::string>& core_triangle,
                        const Matroid& part, const std::vector<std::string>& part_triangle,
                        const std::string& prefix) {
  if (core_triangle.size() != 3 || part_triangle.size() != 3) {
    throw MatroidError(ErrorCode::kNotATriangle, "a triangle has three labels");
  }
  std::vector<std::string> labels;
  for (const auto& l : part.labels()) {
    auto it = std::find(part_triangle.begin(), part_triangle.end(), l);
    labels.push_back(it == part_triangle.end() ? prefix + l
                                               : core_triangle[static_cast<std::size_t>(
                                                     it - part_triangle.begin())]);
  }
  return three_sum(core, relabel(part, std::move(labels)));
}

namespace {

// The six ways of matching the 4-wheel triangle {s1, r1, s2} to a triangle.
std::vector<std::vector<std::string>> wheel_triangle_orders() {
  std::vector<std::string> t = {"r1", "s1", "s2"};
  std::vector<std::vector<std::string>> out;
  do {
    out.push_back(t);
  } while (std::next_permutation(t.begin(), t.end()));
  return out;
}

}  // namespace

std::vector<Fixture> composed_fixtures() {
  // A triad of each part meeting the triangle in the same pair would leave a
  // series pair behind, so the matching of the triangles is searched for one
  // giving a 3-connected sum.
  const auto orders = wheel_triangle_orders();
  std::vector<Fixture> out;
  const std::pair<const char*, std::size_t> singles[] = {
      {"F7", 4}, {"S8", 4}, {"F7", 5}, {"S8", 5}, {"F7", 6}};
  for (const auto& [core_name, r] : singles) {
    const Matroid& core = catalog::get(core_name);
    const auto t = core.labels_of(triangles(core).front());
    for (const auto& order : orders) {
      Matroid m = three_sum_along(core, t, wheel(r), order, "w");
      if (!is_3connected(m)) continue;
      out.push_back({std::string(core_name) + "+W" + std::to_string(r), std::move(m),
                     StructureKind::kThreeSum});
      break;
    }
  }

  // Two disjoint triangles, one through p and one through the element p
  // doubles.
  for (const char* core_name : {"F7P", "S8P"}) {
    const Matroid& core = catalog::get(core_name);
    const std::size_t p = core.index("p");
    std::size_t twin = p;
    for (std::size_t e = 0; e < core.size(); ++e) {
      if (e != p && core.column(e) == core.column(p)) twin = e;
    }
    const auto tris = triangles(core);
    std::optional<Matroid> found;
    for (auto a : tris) {
      if (found || !a.contains(twin) || a.contains(p)) continue;
      auto b = std::find_if(tris.begin(), tris.end(), [&](ElementSet t) {
        return t.contains(p) && !t.intersects(a);
      });
      if (b == tris.end()) continue;
      for (const auto& first : orders) {
        const Matroid once = three_sum_along(core, core.labels_of(a), wheel(4), first, "u");
        for (const auto& second : orders) {
          Matroid twice = three_sum_along(once, core.labels_of(*b), wheel(4), second, "v");
          if (is_3connected(twice)) {
            found = std::move(twice);
            break;
          }
        }
        if (found) break;
      }
    }
    if (found) {
      out.push_back({std::string(core_name) + "+W4+W4", std::move(*found),
                     StructureKind::kDoubleThreeSum});
    }
  }
  return out;
}

CheckReport check_two_regular_characterization(std::size_t n) {
  const auto start = std::chrono::steady_clock::now();
  Recorder rec("theorem1.1");
  std::map<std::string, std::size_t> kinds;
  for (const auto& inst : enumerate_3connected(n)) {
    const Matroid& m = inst.matroid;
    if (is_regular(m).regular) continue;
    rec.count();
    const std::size_t k = regular_elements(m).size();
    const Classification c = classify(m);
    ++kinds[std::string(kind_name(c.kind))];
    rec.expect(in_class(c.kind) == (k >= 2), inst.id, m,
               "in class (" + std::string(kind_name(c.kind)) + ") iff |R| >= 2 (|R| = " +
                   std::to_string(k) + ")");
  }
  std::string summary;
  for (const auto& [kind, count] : kinds) {
    summary += (summary.empty() ? "" : " ") + kind + ":" + std::to_string(count);
  }
  rec.note("classifier kinds: " + (summary.empty() ? std::string("none") : summary));

  for (const auto& fx : composed_fixtures()) {
    rec.count();
    const Matroid& m = fx.matroid;
    rec.expect(is_3connected(m), fx.name, m, "3-connected");
    if (!rec.expect(!is_regular(m).regular, fx.name, m, "non-regular")) continue;
    rec.expect(regular_elements(m).size() >= 2, fx.name, m, "|R| >= 2");
    if (is_3connected(m)) {
      const auto kind = classify(m).kind;
      rec.expect(kind == fx.expected, fx.name, m,
                 "classified as " + std::string(kind_name(fx.expected)) + " (got " +
                     std::string(kind_name(kind)) + ")");
    }
  }
  return rec.finish(start);
}

CheckReport check_catalog_facts() {
  const auto start = std::chrono::steady_clock::now();
  Recorder rec("catalog");
  auto count_is = [&](const std::string& id, const Matroid& m, std::size_t expected) {
    rec.count();
    const auto report = regularity_report(m);
    const bool ok = !report.is_regular && report.regular_elements.size() == expected;
    rec.expect(ok, id, m, "|R| = " + std::to_string(expected));
  };
  count_is("F7", catalog::get("F7"), 7);
  count_is("F7*", catalog::get("F7*"), 7);
  count_is("P9", catalog::get("P9"), 4);
  count_is("AG32", catalog::get("AG32"), 0);
  count_is("Z4", catalog::get("Z4"), 0);
  count_is("S10", catalog::get("S10"), 1);
  count_is("S10*", catalog::get("S10*"), 1);
  count_is("E5", catalog::get("E5"), 0);
  const Matroid& t12 = catalog::get("T12");
  for (std::size_t e = 0; e < t12.size(); ++e) {
    const ElementSet one = ElementSet::single(e);
    count_is("T12\\" + t12.label(e), delete_elements(t12, one), 0);
    count_is("T12/" + t12.label(e), contract_elements(t12, one), 0);
  }
  {
    const Matroid& p9 = catalog::get("P9");
    const ElementSet r = regular_elements(p9);
    rec.expect(is_circuit(p9, r) && is_cocircuit(p9, r), "P9", p9, "R is a circuit and a cocircuit");
  }

  for (const char* name : {"S8", "E5", "T12"}) {
    const Matroid& m = catalog::get(name);
    rec.count();
    rec.expect(is_isomorphic(m, dual(m)).has_value(), name, m, "self-dual");
  }
  for (const char* name : {"S10", "E5", "T12"}) {
    const Matroid& m = catalog::get(name);
    rec.count();
    rec.expect(is_internally_4connected(m), name, m, "internally 4-connected");
  }

  // P9 as the 4-wheel plus an element on a circuit with spokes s1 s2 s3.
  const Matroid w4 = wheel(4);
  std::vector<std::string> labels = w4.labels();
  std::vector<std::uint64_t> cols = w4.columns();
  labels.push_back("x");
  cols.push_back(cols[w4.index("s1")] ^ cols[w4.index("s2")] ^ cols[w4.index("s3")]);
  const Matroid p9 = Matroid::from_columns(labels, cols);
  rec.count();
  rec.expect(is_isomorphic(p9, catalog::get("P9")).has_value(), "W4+x", p9, "isomorphic to P9");
  const std::pair<MinorWitness, const char*> witnesses[] = {
      {{{"s1"}, {}}, "S8"}, {{{"s3"}, {}}, "S8"}, {{{"s1", "s3"}, {}}, "F7*"}};
  for (const auto& [w, target] : witnesses) {
    std::string id = "W4+x";
    for (const auto& d : w.deleted) id += "\\" + d;
    rec.count();
    rec.expect(is_isomorphic(apply_minor(p9, w), catalog::get(target)).has_value(), id, p9,
               std::string("isomorphic to ") + target);
  }

  auto extensions_are = [&](const char* base, std::vector<const char*> expected) {
    const Matroid& m = catalog::get(base);
    rec.count();
    const auto exts = single_element_extensions(m, true);
    rec.expect(exts.size() == expected.size(), base, m,
               std::to_string(expected.size()) + " simple single-element extension classes");
    for (const char* name : expected) {
      const bool found = std::any_of(exts.begin(), exts.end(), [&](const Matroid& x) {
        return is_isomorphic(x, catalog::get(name)).has_value();
      });
      rec.expect(found, base, m, std::string("extends to ") + name);
    }
  };
  extensions_are("F7*", {"S8", "AG32"});
  extensions_are("S8", {"Z4", "P9"});
  extensions_are("AG32", {"Z4"});
  return rec.finish(start);
}

void write_summary(std::ostream& out, const CheckReport& report) {
  out << "check " << report.name << ' ' << (report.passed() ? "PASS" : "FAIL")
      << " instances=" << report.instances << " assertions=" << report.records.size()
      << " failures=" << report.failures.size() << '\n';
  for (const auto& n : report.notes) out << "note " << n << '\n';
  for (const auto& f : report.failures) {
    out << "failure " << f.instance << ": " << f.assertion << '\n' << f.serialization;
  }
}

void write_records(std::ostream& out, const CheckReport& report) {
  for (const auto& r : report.records) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["instance"] = r.instance;
    j["assertion"] = r.assertion;
    j["result"] = r.passed ? "pass" : "fail";
    out << j.dump() << '\n';
  }
}

}  // namespace binmat
