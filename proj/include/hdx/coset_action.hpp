/**
 * Permutation actions of a generating set on a finite coset space.
 *
 * A CosetAction is the combinatorial stand-in for the representation of a
 * group on the functions over a finite-index coset space: one permutation
 * per generator, composed homomorphically over words (right-to-left, so
 * act(uv, j) = act(u, act(v, j))).  Subgroups enter the library only in
 * this form; no coset enumeration is ever performed.
 */

#ifndef HDX_COSET_ACTION_HPP
#define HDX_COSET_ACTION_HPP

#include <string>
#include <vector>

#include "hdx/errors.hpp"

namespace hdx {

class CosetAction {
public:
    /**
     * Validated construction from one-line permutations.
     *
     * perms[g][j] is where generator g sends coset j.  Every entry must be
     * a bijection of {0..n-1}; anything else raises InvalidPermutation.
     */
    static CosetAction from_perms(std::vector<std::vector<int>> perms, int n) {
        if (n < 1)
            throw InvalidPermutation("coset space must have at least one point");
        for (const auto& p : perms) {
            if (static_cast<int>(p.size()) != n)
                throw InvalidPermutation("permutation length differs from coset count");
            std::vector<bool> hit(static_cast<std::size_t>(n), false);
            for (int img : p) {
                if (img < 0 || img >= n || hit[static_cast<std::size_t>(img)])
                    throw InvalidPermutation("not a bijection of {0..N-1}");
                hit[static_cast<std::size_t>(img)] = true;
            }
        }
        CosetAction a;
        a.n_ = n;
        a.perms_ = std::move(perms);
        a.inverse_.reserve(a.perms_.size());
        for (const auto& p : a.perms_) {
            std::vector<int> inv(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                inv[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] = j;
            a.inverse_.push_back(std::move(inv));
        }
        return a;
    }

    /** The index-1 action: every generator fixes the single coset. */
    static CosetAction trivial(int generator_count) {
        return from_perms(
            std::vector<std::vector<int>>(static_cast<std::size_t>(generator_count),
                                          std::vector<int>{0}),
            1);
    }

    int index() const { return n_; }

    int generator_count() const { return static_cast<int>(perms_.size()); }

    int identity_coset() const { return identity_coset_; }

    /** Image of coset j under one signed generator letter. */
    int apply_letter(int generator, bool inverse, int j) const {
        if (generator < 0 || generator >= generator_count())
            throw UnknownGenerator("generator index " + std::to_string(generator) +
                                   " outside action");
        const auto& p = inverse ? inverse_[static_cast<std::size_t>(generator)]
                                : perms_[static_cast<std::size_t>(generator)];
        return p[static_cast<std::size_t>(j)];
    }

    const std::vector<std::vector<int>>& perms() const { return perms_; }

    bool operator==(const CosetAction& o) const {
        return n_ == o.n_ && perms_ == o.perms_;
    }

private:
    CosetAction() = default;

    int n_ = 1;
    int identity_coset_ = 0;
    std::vector<std::vector<int>> perms_;
    std::vector<std::vector<int>> inverse_;
};

} // namespace hdx

#endif // HDX_COSET_ACTION_HPP
