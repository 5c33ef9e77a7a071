#include "dpc/instance.hpp"
#include "dpc/invariants.hpp"
#include "dpc/strata.hpp"

namespace dpc {

std::vector<SingType> basket_of(const ModelInstance& inst) {
  std::vector<SingType> out;
  for (const auto& st : strata_of(inst.ambient)) {
    auto pts = stratum_points(inst.equations, st.support);
    using S = StratumPoints::Status;
    if (pts.status == S::Empty) continue;
    if (pts.status == S::Contained)
      throw NotIsolated("X contains the stratum " + st.str(inst.ambient));
    if (pts.status == S::Unsupported &&
        torus_intersection(inst.equations, st.support).status == TorusAnalysis::Status::Empty)
      continue;
    if (pts.status == S::Unsupported)
      throw Error("UnsupportedStratum", "cannot decide points of X on " + st.str(inst.ambient));
    for (const auto& [count, ab] : transverse_characters(inst.equations, inst.degrees, st.support, st.order, pts)) {
      auto s = normalize_sing(st.order, ab.first, ab.second);
      if (!s) continue;
      s->multiplicity = count;
      out.push_back(*s);
    }
  }
  return canonical_basket(out);
}

}  // namespace dpc
