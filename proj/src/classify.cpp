#include "milnor/classify.hpp"

#include "milnor/errors.hpp"

namespace milnor {

std::string to_string(CoarseClass c) {
    switch (c) {
        case CoarseClass::Smooth: return "smooth";
        case CoarseClass::AType: return "A-type";
        case CoarseClass::CorankTwoFamily: return "corank-two";
        case CoarseClass::Other: return "other";
    }
    return "?";
}

Classification classify_germ(const Polynomial& germ, std::uint64_t seed, int trials, Budget& budget) {
    const int n = germ.nvars();
    if (n < 2) throw PreconditionError("classification expects a germ in at least two variables");
    Classification out;
    out.mu_sequence = germ_sectional_sequence(germ, seed, trials, budget);
    out.corank = hessian_corank(germ);
    const std::int64_t mu = out.mu_sequence.back();
    const std::int64_t slice = out.mu_sequence[n - 1];
    out.k = 0;
    if (mu == 0) {
        out.cls = CoarseClass::Smooth;
    } else if (slice == 1) {
        out.cls = CoarseClass::AType;
        out.k = mu;
    } else if (slice == 2) {
        out.cls = CoarseClass::CorankTwoFamily;
    } else {
        out.cls = CoarseClass::Other;
    }
    const bool a_by_corank = out.corank <= 1 && mu >= 1;
    if (a_by_corank != (out.cls == CoarseClass::AType))
        throw InstabilityError("slice verdict disagrees with the Hessian corank");
    return out;
}

Classification classify_point(const Hypersurface& h, const ProjectivePoint& x, std::uint64_t seed, int trials,
                              Budget& budget) {
    return classify_germ(germ_at(h, x), seed, trials, budget);
}

}  // namespace milnor
