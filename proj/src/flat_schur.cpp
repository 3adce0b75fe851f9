#include "cqs/schur_impl.hpp"

namespace cqs {

template class SchurAlgebra<FlatAlgebra<Fp>>;
template class SchurAlgebra<FlatAlgebra<Rational>>;

}  // namespace cqs
