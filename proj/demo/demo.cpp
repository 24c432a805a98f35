// Copyright 2026 The resdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// A short tour of the library: one determinant three ways, the closed-form
// sign of its square root, and the exceptional set E_2(13).

#include <iostream>

#include "resdet/closed_forms.hpp"
#include "resdet/ekm_search.hpp"
#include "resdet/finite_field.hpp"
#include "resdet/residue_matrix.hpp"

int main()
{
    using namespace resdet;

    // S_{3,2}(-1,5) over the squares {1, 4} mod 5
    const auto p5 = PrimeModulus::of(5);
    const ResidueList squares = kth_residues(p5, 2);
    const ResidueMatrix s = build_matrix(squares, 3, -1);
    std::cout << "S_{3,2}(-1,5): det mod 5 = " << det_mod_p(s) << ", exact = " << det_exact(squares, 3, -1)
              << ", pfaffian mod 5 = " << pfaffian_mod_p(s) << '\n';

    // Sign of sqrt S_{1+(p-1)/2,2}(-1,p) at p = 13, from the matrix and from the closed form
    const auto p13 = PrimeModulus::of(13);
    const ResidueList r13 = kth_residues(p13, 2);
    const residue pf = pfaffian_mod_p(build_matrix(r13, 1 + r13.size(), -1));
    const int t = legendre(residue_diff_product(r13), p13);
    std::cout << "p = 13: (pf/p) = " << legendre(pf, p13) << ", closed form = " << theorem3_rhs(2, p13, t)
              << ", (-1)^count (p/3) = " << conjecture63_rhs(p13) << '\n';

    // E_2(13) from the criterion integers, each member confirmed mod p
    const EkmReport report = ekm_by_criterion(2, 13);
    std::cout << "E_2(13) = {";
    for (std::size_t i = 0; i < report.members.size(); ++i)
        std::cout << (i ? ", " : "") << report.members[i].p;
    std::cout << "}\n";
    std::cout << "26!! + 25!! = " << report.head->value << '\n';
    return 0;
}
