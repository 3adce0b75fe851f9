#pragma once

#include "cqs/check.hpp"
#include "cqs/flat.hpp"
#include "cqs/hecke.hpp"

namespace cqs {

// Defining relations of H as computed identities, plus L_k = T_k L_{k-1} T_k
// and commutativity of the L_k.
template <class K>
Check check_ak_relations(const AKAlgebra<K>& A);

// Defining relations of the modified algebra, with T_j xi_k = xi_k T_j for
// k outside {j-1, j}.
template <class K>
Check check_flat_relations(const FlatAlgebra<K>& F);

// Rank of the Murphy coordinate matrix over all r-multipartitions of n.
template <class K>
Check check_murphy_rank(const AKAlgebra<K>& A);
template <class K>
Check check_flat_murphy_rank(const FlatAlgebra<K>& F);

}  // namespace cqs
