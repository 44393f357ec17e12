#pragma once
#include <string>
#include <vector>

#include "gapprob/multipoly.hpp"
#include "gapprob/puiseux.hpp"

namespace gp {

// p_0..p_kmax with t_i replaced by args[i-1] (missing args are 0).
std::vector<MultiPoly> schur_polynomials(int k_max, const std::vector<MultiPoly>& args);
// p_0..p_kmax in the variables t1..t_{var_count}.
std::vector<MultiPoly> schur_polynomials(int k_max, int var_count);

// Schur function s_lambda = det(p_{lambda_i - i + j}) in t1..t_|lambda|.
MultiPoly schur_function(const std::vector<int>& partition);
std::vector<std::vector<int>> partitions(int n);

std::string tvar(int i);  // "t<i>"

}  // namespace gp
