#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catcoh/coeff.hpp"
#include "catcoh/complexes.hpp"
#include "catcoh/simplicial.hpp"

namespace catcoh {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Outcome of one theorem-level verification with its evidence.
struct TheoremReport {
    std::string theorem;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, GradedInvariants>> sides;
    std::vector<std::pair<std::string, TheoremReport>> hypotheses;
    std::vector<CheckResult> checks;
    /// Named dimension tables over bidegrees (spectral sequence pages).
    std::vector<std::pair<std::string, std::map<std::pair<int, int>, int>>> tables;
    /// "pass", "fail", or "hypothesis-fails" (theorem 2 only: no claim is made).
    std::string verdict;
    std::string note;
    int window = -1;
    double wall_ms = 0;

    bool empty() const { return theorem.empty(); }
    bool all_checks_pass() const;
    /// Exit-code sense: false only for "fail".
    bool ok() const { return verdict != "fail"; }
};

/// Columns of C^n above which the explicit induced-map rank check is skipped.
inline constexpr int kInducedRankLimit = 400;

/// Theorem 1 (kappa, under == false) or its dual (upsilon, under == true).
/// M must be carried by a nerve of phi.source.
TheoremReport verify_theorem1(const Functor& phi, const CoefficientSystemPtr& M, int N, bool under = false);
/// M must be carried by a nerve of phi.target.
TheoremReport verify_theorem2(const Functor& phi, const CoefficientSystemPtr& M, int N);
/// M must be carried by G.commas.category_nerve; field rings only.
TheoremReport verify_theorem3(const GrothendieckHocolim& G, const CoefficientSystemPtr& M, int N);
TheoremReport verify_prop_diag(const BiCoefficientSystemPtr& M, int N);
TheoremReport verify_dold_puppe(const BisimplicialSetPtr& X, const Ring& ring, int N);
TheoremReport verify_lambda2(const GrothendieckHocolim& G, const CoefficientSystemPtr& M, int N);
/// The worked counterexample, end to end.
TheoremReport verify_husainov();

/// Randomized theorem-2 sweep: one sub-report per instance; verdict "fail" iff some
/// instance combines a passing hypothesis with a failing conclusion.
TheoremReport sweep_theorem2(std::uint64_t seed, int count, int N, const Ring& ring);
/// Randomized theorem-1 sweep over the same instance generator (phi and M on N(source)).
TheoremReport sweep_theorem1(std::uint64_t seed, int count, int N, const Ring& ring);

}  // namespace catcoh
