#include "qdeform/rmx/contraction.hpp"

#include "qdeform/rmx/verify.hpp"

namespace qdeform {

SymMatrix contract_limit(const SymMatrix& r, const ContractionSpec& spec) {
  SymMatrix t = spec.transform.substitute({{spec.eta_symbol, spec.eta_def}});
  SymMatrix conj = conjugate_r(r, t);
  if (!spec.rebind.empty()) conj = conj.substitute(spec.rebind);
  return conj.limit(spec.limit_param, spec.limit_value);
}

ColouredFamily contract_limit(const ColouredFamily& fam, const ContractionSpec& spec) {
  return ColouredFamily(contract_limit(fam.entries(), spec), spec.result_first, spec.result_second);
}

}  // namespace qdeform
