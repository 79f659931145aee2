#include "binmat/regularity.hpp"

#include "binmat/catalog.hpp"
#include "binmat/error.hpp"

namespace binmat {

RegularityResult is_regular(const Matroid& m) {
  RegularityResult result;
  if (m.size() < 7) return result;
  for (const char* name : {"F7", "F7*"}) {
    if (auto w = has_minor(m, catalog::get(name))) {
      result.regular = false;
      result.witness = std::move(w);
      result.excluded_minor = name;
      return result;
    }
  }
  return result;
}

bool is_regular_element(const Matroid& m, std::size_t e) {
  const ElementSet single = ElementSet::single(e);
  return is_regular(delete_elements(m, single)).regular &&
         is_regular(contract_elements(m, single)).regular;
}

ElementSet regular_elements(const Matroid& m) {
  if (is_regular(m).regular) {
    throw MatroidError(ErrorCode::kNotApplicable,
                       "regular elements are only defined for non-regular matroids");
  }
  ElementSet out;
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (is_regular_element(m, e)) out.insert(e);
  }
  return out;
}

RegularReport regularity_report(const Matroid& m) {
  RegularReport report;
  auto r = is_regular(m);
  report.is_regular = r.regular;
  report.witness = std::move(r.witness);
  if (!report.is_regular) {
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (is_regular_element(m, e)) report.regular_elements.insert(e);
    }
  }
  return report;
}

}  // namespace binmat
