#include "cqs/schur_impl.hpp"

namespace cqs {

template class SchurAlgebra<AKAlgebra<Fp>>;
template class SchurAlgebra<AKAlgebra<Rational>>;

}  // namespace cqs
