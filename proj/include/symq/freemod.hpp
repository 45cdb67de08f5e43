#pragma once

#include <optional>
#include <utility>

#include "symq/ring.hpp"

namespace symq {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct FormNotAlternating : std::invalid_argument {
    explicit FormNotAlternating(const std::string& what) : std::invalid_argument(what) {}
};

/// Coordinates of a module element, length rank(), each entry canonical.
using Vec = std::vector<RElem>;

/**
 * The free module R^k with canonical element indexing.
 *
 * Vector index = sum index(coords[i]) * |R|^i, coordinate 0 least significant;
 * a bijection onto [0, |R|^k).
 */
class FreeModule {
public:
    FreeModule(Ring ring, int rank);

    const Ring& ring() const { return ring_; }
    int rank() const { return rank_; }
    long long size() const { return size_; }

    Vec coords(long long index) const;
    long long index(const Vec& v) const;

    Vec zero() const { return Vec(rank_, 0); }
    Vec basis(int i) const;
    Vec add(const Vec& x, const Vec& y) const;
    Vec sub(const Vec& x, const Vec& y) const;
    Vec neg(const Vec& x) const;
    Vec scale(RElem r, const Vec& x) const;
    bool is_zero(const Vec& x) const;

    /// Printable coordinate tuple, e.g. "(1,3)".
    std::string label(const Vec& v) const;

private:
    Ring ring_;
    int rank_;
    long long size_;
};

/**
 * An alternating bilinear form given by its Gram matrix: <x,y> = x^T G y.
 * Construction rejects matrices with a nonzero diagonal entry or with
 * gram[j][i] != -gram[i][j].
 */
class GramForm {
public:
    GramForm(const Ring& ring, std::vector<std::vector<RElem>> gram);

    /// Block [[0,1],[-1,0]] repeated; requires even rank.
    static GramForm standard(const Ring& ring, int rank);
    /// c times the standard form.
    static GramForm scaled(const Ring& ring, int rank, RElem c);
    static GramForm zero(const Ring& ring, int rank);

    int rank() const { return rank_; }
    RElem entry(int i, int j) const { return gram_[i][j]; }
    const std::vector<std::vector<RElem>>& gram() const { return gram_; }

    GramForm negated(const Ring& ring) const;

private:
    int rank_;
    std::vector<std::vector<RElem>> gram_;
};

RElem form_eval(const FreeModule& m, const GramForm& f, const Vec& x, const Vec& y);

/// Exact determinant by cofactor expansion.
RElem form_determinant(const Ring& ring, const GramForm& f);

/// True iff only x = 0 pairs to zero with every y (exhaustive kernel scan;
/// fast path when det(G) is a unit).
bool is_nondegenerate(const FreeModule& m, const GramForm& f);

/// True iff det(G) is a unit of R.
bool is_unimodular(const FreeModule& m, const GramForm& f);

/// First pair (e,f) with <e,f> = 1 in canonical scan order: when a unit value
/// u = <x,y> is found, returns (u^{-1} x, y).
std::optional<std::pair<Vec, Vec>> find_hyperbolic_pair(const FreeModule& m, const GramForm& f);

}  // namespace symq
