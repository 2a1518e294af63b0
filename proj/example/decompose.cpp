// Decompose the holomorphic differentials of one cover and check a member of the family.
//
//   ./build/example/decompose 5 7

#include <cstdlib>
#include <iostream>

#include <galois_diff.hpp>

int main(int argc, char** argv)
{
    using namespace galois_diff;

    const std::int64_t p = argc > 1 ? std::atoll(argv[1]) : 5;
    const std::int64_t m = argc > 2 ? std::atoll(argv[2]) : 7;
    const CurveParams c = make_params(PrimeP(p), m);

    const DecompositionReport r = verify_all(c);
    std::cout << "genus " << r.genus << ":";
    for (const auto& mod : r.modules) std::cout << "  V_" << mod.a1 << " x" << mod.multiplicity;
    std::cout << "\n";

    const FamilyMember member = zero_member(c);
    std::cout << "f(x) = " << member.f << "\n";
    std::cout << "smooth: " << std::boolalpha << smoothness_check(member) << "\n";

    const ASReduction red = as_reduction(member);
    std::cout << "mod lambda: " << red.lhs << " = x^" << c.l << " / (" << red.rhs_denominator << ")\n";

    std::cout << "rep_matrix(1, 2):\n";
    const RepMatrix mat = rep_matrix(1, 2, c.p);
    for (std::size_t i = 0; i < mat.size(); ++i) {
        for (std::size_t j = 0; j < mat.size(); ++j) std::cout << (j ? "  " : "  [") << mat(i, j);
        std::cout << "]\n";
    }
    return r.all_passed() ? 0 : 1;
}
