#include "binmat/classify.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "binmat/catalog.hpp"
#include "binmat/connectivity.hpp"
#include "binmat/error.hpp"
#include "binmat/io.hpp"
#include "binmat/isomorphism.hpp"
#include "binmat/regularity.hpp"
#include "binmat/structure.hpp"

namespace binmat {

std::string_view kind_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::kSmallException: return "SMALL_EXCEPTION";
    case StructureKind::kThreeSum: return "THREE_SUM";
    case StructureKind::kDoubleThreeSum: return "DOUBLE_THREE_SUM";
    case StructureKind::kNotInClass: return "NOT_IN_CLASS";
    case StructureKind::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "UNKNOWN";
}

bool in_class(StructureKind kind) {
  return kind == StructureKind::kSmallException || kind == StructureKind::kThreeSum ||
         kind == StructureKind::kDoubleThreeSum;
}

namespace {

using Glue = std::vector<std::string>;

struct Stripped {
  Matroid matroid;
  /// Removed label -> glue label it is parallel to.
  std::vector<std::pair<std::string, std::string>> removed;
};

// Removes every non-glue element parallel to a glue element.
Stripped strip_parallel_to(const Matroid& part, const Glue& glue) {
  std::unordered_map<std::uint64_t, std::string> glue_column;
  ElementSet glue_set;
  for (const auto& g : glue) {
    if (auto i = part.find(g)) {
      glue_set.insert(*i);
      glue_column.emplace(part.column(*i), g);
    }
  }
  Stripped out;
  ElementSet drop;
  for (std::size_t e = 0; e < part.size(); ++e) {
    if (glue_set.contains(e) || part.column(e) == 0) continue;
    auto it = glue_column.find(part.column(e));
    if (it != glue_column.end()) {
      drop.insert(e);
      out.removed.emplace_back(part.label(e), it->second);
    }
  }
  out.matroid = delete_elements(part, drop);
  return out;
}

// Adds to `part` a parallel copy of each glue element that `removed` lists
// against a label `part` carries.
Matroid attach_parallels(const Matroid& part,
                         const std::vector<std::pair<std::string, std::string>>& removed) {
  std::vector<std::string> labels = part.labels();
  std::vector<std::uint64_t> cols = part.columns();
  for (const auto& [label, glue] : removed) {
    if (auto g = part.find(glue)) {
      labels.push_back(label);
      cols.push_back(part.column(*g));
    }
  }
  return Matroid::from_columns(std::move(labels), cols);
}

bool regular_and_3connected(const Matroid& m) {
  return is_3connected(m) && is_regular(m).regular;
}

std::optional<std::string> match_core(const Matroid& m, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    const Matroid& core = catalog::get(name);
    if (m.size() == core.size() && m.rank() == core.rank() && is_isomorphic(m, core)) {
      return std::string(name);
    }
  }
  return std::nullopt;
}

int free_tag(const Matroid& m, int start) {
  for (int tag = start;; ++tag) {
    const std::string suffix = "#" + std::to_string(tag);
    if (!m.find("t1" + suffix) && !m.find("t2" + suffix) && !m.find("t3" + suffix)) return tag;
  }
}

LabeledSeparation labeled(const Matroid& m, const Separation& s) {
  return {m.labels_of(s.side1), m.labels_of(s.side2)};
}

// Exact 3-separations with both sides >= 4, most balanced first.
std::vector<Separation> balanced_splits(const Matroid& m) {
  auto seps = separations(m, 3, true);
  std::erase_if(seps, [](const Separation& s) { return s.side1.size() < 4 || s.side2.size() < 4; });
  std::stable_sort(seps.begin(), seps.end(), [](const Separation& a, const Separation& b) {
    return a.side1.size() > b.side1.size();
  });
  return seps;
}

Glue glue_of(const ThreeSumParts& parts) {
  return {parts.triangle.begin(), parts.triangle.end()};
}

std::optional<Classification> as_three_sum(const Matroid& m, const std::vector<Separation>& splits,
                                           int tag) {
  for (const auto& sep : splits) {
    const ThreeSumParts parts = decompose_3sep(m, sep, tag);
    const Glue glue = glue_of(parts);
    for (int flip = 0; flip < 2; ++flip) {
      const Matroid& core_side = flip == 0 ? parts.first : parts.second;
      const Matroid& other_side = flip == 0 ? parts.second : parts.first;
      const Stripped other = strip_parallel_to(other_side, glue);
      if (!regular_and_3connected(other.matroid)) continue;
      const Stripped core = strip_parallel_to(core_side, glue);
      auto name = match_core(core.matroid, {"F7", "S8"});
      if (!name) continue;

      Classification c;
      c.kind = StructureKind::kThreeSum;
      c.core_name = *name;
      c.core_part = core.matroid;
      c.regular_parts.push_back(attach_parallels(other_side, core.removed));
      c.glue_triangles.push_back(parts.triangle);
      c.separations.push_back(labeled(m, sep));
      for (const auto& r : core.removed) c.parallel_to_glue.push_back(r.first);
      for (const auto& r : other.removed) c.parallel_to_glue.push_back(r.first);
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Classification> as_double_three_sum(const Matroid& m,
                                                  const std::vector<Separation>& splits,
                                                  int tag) {
  for (const auto& sep : splits) {
    const ThreeSumParts parts = decompose_3sep(m, sep, tag);
    const Glue glue = glue_of(parts);
    for (int flip = 0; flip < 2; ++flip) {
      const Matroid& rest = flip == 0 ? parts.first : parts.second;
      const Matroid& outer_side = flip == 0 ? parts.second : parts.first;
      const Stripped outer = strip_parallel_to(outer_side, glue);
      if (!regular_and_3connected(outer.matroid)) continue;
      if (is_regular(rest).regular) continue;

      const ElementSet first_glue = rest.subset(glue);
      const int inner_tag = free_tag(rest, tag + 1);
      for (const auto& inner : balanced_splits(rest)) {
        bool core_first;
        if (first_glue.is_subset_of(inner.side1)) {
          core_first = true;
        } else if (first_glue.is_subset_of(inner.side2)) {
          core_first = false;
        } else {
          continue;
        }
        const ThreeSumParts split = decompose_3sep(rest, inner, inner_tag);
        const Glue inner_glue = glue_of(split);
        const Matroid& core_side = core_first ? split.first : split.second;
        const Matroid& inner_side = core_first ? split.second : split.first;
        const Stripped inner_part = strip_parallel_to(inner_side, inner_glue);
        if (!regular_and_3connected(inner_part.matroid)) continue;
        Glue both = glue;
        both.insert(both.end(), inner_glue.begin(), inner_glue.end());
        const Stripped core = strip_parallel_to(core_side, both);
        auto name = match_core(core.matroid, {"F7P", "S8P"});
        if (!name) continue;

        Classification c;
        c.kind = StructureKind::kDoubleThreeSum;
        c.core_name = *name;
        c.core_part = core.matroid;
        c.regular_parts.push_back(attach_parallels(inner_side, core.removed));
        c.regular_parts.push_back(attach_parallels(outer_side, core.removed));
        c.glue_triangles.push_back(split.triangle);
        c.glue_triangles.push_back(parts.triangle);
        c.separations.push_back(labeled(m, sep));
        c.separations.push_back(labeled(rest, inner));
        for (const auto& r : core.removed) c.parallel_to_glue.push_back(r.first);
        for (const auto& r : inner_part.removed) c.parallel_to_glue.push_back(r.first);
        for (const auto& r : outer.removed) c.parallel_to_glue.push_back(r.first);
        return c;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Classification classify(const Matroid& m) {
  if (!is_3connected(m)) {
    throw MatroidError(ErrorCode::kNotThreeConnected, "classification needs a 3-connected matroid");
  }
  Classification c;
  if (is_regular(m).regular) {
    c.kind = StructureKind::kNotApplicable;
    return c;
  }
  if (auto name = match_core(m, {"F7", "F7*", "S8"})) {
    c.kind = StructureKind::kSmallException;
    c.core_name = *name;
    c.core_part = m;
    return c;
  }
  const auto splits = balanced_splits(m);
  const int tag = free_tag(m, 1);
  if (auto found = as_three_sum(m, splits, tag)) return *found;
  if (auto found = as_double_three_sum(m, splits, tag)) return *found;
  c.kind = StructureKind::kNotInClass;
  return c;
}

std::string to_report(const Classification& c) {
  std::ostringstream out;
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s;
  };
  out << "kind " << kind_name(c.kind) << '\n';
  if (!c.core_name.empty()) out << "core " << c.core_name << '\n';
  for (const auto& t : c.glue_triangles) out << "glue " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  for (const auto& s : c.separations) {
    out << "separation " << join(s.side1) << " | " << join(s.side2) << '\n';
  }
  if (!c.parallel_to_glue.empty()) out << "parallel " << join(c.parallel_to_glue) << '\n';
  if (c.core_part) {
    out << "part core\n";
    write_bm(out, c.core_name, *c.core_part);
  }
  for (std::size_t i = 0; i < c.regular_parts.size(); ++i) {
    out << "part regular " << i + 1 << '\n';
    write_bm(out, "regular" + std::to_string(i + 1), c.regular_parts[i]);
  }
  return out.str();
}

}  // namespace binmat
