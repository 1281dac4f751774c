#ifndef COXCANON_ENUMERATE_HPP_
#define COXCANON_ENUMERATE_HPP_

#include <vector>

#include "coxcanon/affine_a.hpp"
#include "coxcanon/affine_bd.hpp"

namespace coxcanon {

// Canonical forms generated from their parametrizations, without the oracle.
// A negative max_affine means no bound on the number of bricks.

std::vector<AffineBlockA> enumerate_blocks_a(int n, int max_affine,
                                             int max_len);
std::vector<FiniteACanonical> enumerate_finite_a(int n);
std::vector<CanonicalFormA> enumerate_forms_a(int n, int max_len,
                                              int max_affine = -1);

std::vector<FiniteDCanonical> enumerate_finite_d(int n);

std::vector<BBlock> enumerate_blocks_b(int n, int max_affine, int max_len);
std::vector<CanonicalFormB> enumerate_forms_b(int n, int max_len,
                                              int max_affine = -1);

int d_brick_length(int n, DBrick b);
std::vector<DBlock> enumerate_blocks_d(int n, int max_affine, int max_len);
std::vector<CanonicalFormD> enumerate_forms_d(int n, int max_len,
                                              int max_affine = -1);

}  // namespace coxcanon

#endif  // COXCANON_ENUMERATE_HPP_
