#include "trinom/check.hpp"

#include <tuple>

namespace trinom {

std::string_view to_string(ClaimId id) {
    switch (id) {
    case ClaimId::Thm1_Eq2: return "Thm1_Eq2";
    case ClaimId::Thm1_Eq4: return "Thm1_Eq4";
    case ClaimId::Thm2_Eq6: return "Thm2_Eq6";
    case ClaimId::Thm2_Eq7: return "Thm2_Eq7";
    case ClaimId::Prop3_Eq9: return "Prop3_Eq9";
    case ClaimId::Prop3_Eq10: return "Prop3_Eq10";
    case ClaimId::Cor4_Eq11: return "Cor4_Eq11";
    case ClaimId::TripleSum_a: return "TripleSum_a";
    case ClaimId::PropP_CC: return "PropP_CC";
    case ClaimId::HalfRow_Binomial: return "HalfRow_Binomial";
    case ClaimId::Babbage: return "Babbage";
    case ClaimId::Wolstenholme: return "Wolstenholme";
    case ClaimId::Glaisher: return "Glaisher";
    case ClaimId::Morley: return "Morley";
    case ClaimId::Carlitz: return "Carlitz";
    case ClaimId::Lemma_GL0: return "Lemma_GL0";
    case ClaimId::Lemma_GL: return "Lemma_GL";
    case ClaimId::Lemma_GL2: return "Lemma_GL2";
    case ClaimId::Lemma_CONG0: return "Lemma_CONG0";
    case ClaimId::Lemma_CONG1: return "Lemma_CONG1";
    case ClaimId::Lemma_C1b: return "Lemma_C1b";
    case ClaimId::Lemma_C1c: return "Lemma_C1c";
    case ClaimId::Lemma_C2b: return "Lemma_C2b";
    case ClaimId::Lemma_C2c: return "Lemma_C2c";
    case ClaimId::Lemma_C3: return "Lemma_C3";
    case ClaimId::Lemma_C3b: return "Lemma_C3b";
    case ClaimId::Lemma_H0: return "Lemma_H0";
    case ClaimId::Lemma_H1: return "Lemma_H1";
    case ClaimId::Lemma_H2: return "Lemma_H2";
    case ClaimId::Lemma_H3: return "Lemma_H3";
    }
    return "?";
}

std::optional<ClaimId> parse_claim(std::string_view name) {
    for (ClaimId id : kAllClaims)
        if (to_string(id) == name)
            return id;
    return std::nullopt;
}

bool claim_takes_n(ClaimId id) {
    switch (id) {
    case ClaimId::Thm1_Eq2:
    case ClaimId::Thm1_Eq4:
    case ClaimId::Prop3_Eq9:
    case ClaimId::Prop3_Eq10:
    case ClaimId::Cor4_Eq11:
    case ClaimId::TripleSum_a:
    case ClaimId::PropP_CC:
    case ClaimId::Glaisher:
        return true;
    default:
        return false;
    }
}

CheckResult make_check(ClaimId claim, u64 p, std::optional<u64> n, std::optional<u64> k,
                       const Residue& lhs, const Residue& rhs) {
    if (lhs.modulus() != rhs.modulus())
        throw ModulusMismatch(lhs.modulus(), rhs.modulus());
    return CheckResult{claim, p, n, k, lhs.modulus(), lhs, rhs, lhs.value() == rhs.value()};
}

bool report_less(const CheckResult& a, const CheckResult& b) {
    auto key = [](const CheckResult& r) {
        return std::make_tuple(r.p, r.n.has_value(), r.n.value_or(0), static_cast<int>(r.claim),
                               r.k.has_value(), r.k.value_or(0));
    };
    return key(a) < key(b);
}

}  // namespace trinom
