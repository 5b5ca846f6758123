#pragma once

#include "permfp/perm_module.hpp"

#include <map>
#include <optional>
#include <random>

namespace permfp {

// A bounded chain complex of permutation modules with homological (lower)
// indexing: the differential at degree n maps X_n -> X_{n-1}, and d o d = 0
// is checked on construction.
class Complex {
public:
    // modules: degree -> module (consecutive degrees need not all appear;
    // missing ones are zero).  differentials: degree n -> map X_n -> X_{n-1};
    // required (and checked) exactly where both ends are nonzero.
    Complex(GroupPtr group, int p, std::map<int, PermModule> modules,
            std::map<int, EquivMap> differentials);

    static Complex unit(const GroupPtr& g, int p);  // k[G/G] in degree 0

    // Single module placed in degree 0.
    static Complex concentrated(const PermModule& m);

    const GroupPtr& group() const { return group_; }
    int p() const { return p_; }

    // Degree window [lo, hi] of possibly nonzero modules.
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    const PermModule& module(int degree) const;  // zero module outside window
    int dim(int degree) const;

    // Differential X_n -> X_{n-1}; zero map when either end is zero.
    EquivMap differential(int degree) const;
    bool has_differential(int degree) const;

    // Drop zero modules at both ends of the window.
    Complex trimmed() const;

    bool operator==(const Complex& rhs) const;

private:
    GroupPtr group_;
    int p_;
    int lo_, hi_;
    std::map<int, PermModule> modules_;
    std::map<int, EquivMap> differentials_;
    std::shared_ptr<const PermModule> zero_;  // shared so copies stay cheap
};

Complex shift(const Complex& x, int s);
Complex direct_sum(const Complex& x, const Complex& y);
Complex tensor(const Complex& x, const Complex& y);
Complex dual(const Complex& x);

// Dimensions of homology per degree over the window.
std::map<int, int> homology_dims(const Complex& x);

// Homology at one degree: dimension plus the action of each group generator
// on a chosen basis of representatives.
struct HomologyModule {
    int dim;
    std::vector<FpMatrix> generator_action;  // one per group generator
};

HomologyModule homology_module(const Complex& x, int degree);

// X (+) [M ->id M], a contractible summand at a seeded degree with a seeded
// orbit module M; homology is unchanged.
Complex perturb_homotopy(const Complex& x, uint64_t seed);

// Random bounded complex: seeded orbit modules and differentials drawn from
// the hom basis subject to d o d = 0 (solved degree by degree).
Complex random_complex(const GroupPtr& g, int p, uint64_t seed, int max_degrees = 3,
                       int max_summands = 2);

}  // namespace permfp
