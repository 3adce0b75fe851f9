#include "cqs/linalg.hpp"

namespace cqs {

#define CQS_LINALG_INSTANTIATE(K)                                          \
    template class Matrix<K>;                                              \
    template Matrix<K> matmul<K>(const Matrix<K>&, const Matrix<K>&, Exec); \
    template std::vector<std::size_t> rref_inplace<K>(Matrix<K>&, Exec);   \
    template Matrix<K> nullspace<K>(const Matrix<K>&);                     \
    template class Solver<K>;                                              \
    template class Echelon<K>;
CQS_LINALG_INSTANTIATE(Fp)
CQS_LINALG_INSTANTIATE(Rational)

}  // namespace cqs
