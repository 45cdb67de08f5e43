#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace symq {

struct NotIdempotent : std::domain_error {
    int x;
    explicit NotIdempotent(int x_)
        : std::domain_error("not idempotent at x=" + std::to_string(x_)), x(x_) {}
};

struct NotRightInvertible : std::domain_error {
    int y;
    explicit NotRightInvertible(int y_)
        : std::domain_error("column y=" + std::to_string(y_) + " is not a bijection"), y(y_) {}
};

struct NotSelfDistributive : std::domain_error {
    int x, y, z;
    NotSelfDistributive(int x_, int y_, int z_)
        : std::domain_error("self-distributivity fails at (" + std::to_string(x_) + "," +
                            std::to_string(y_) + "," + std::to_string(z_) + ")"),
          x(x_), y(y_), z(z_) {}
};

/// A bijection on {0,...,N-1} given by its image array.
struct Permutation {
    std::vector<int> images;

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[i]; }
    bool is_identity() const;
    bool is_bijection() const;
    bool is_involution() const;  // bijection with p(p(x)) = x

    static Permutation identity(int n);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images <=> b.images;
    }
};

/**
 * A finite quandle as a pair of Cayley tables.
 *
 * op(x,y) = x*y and inv_op(x,y) = x*^{-1}y, with the dual-operation identity
 * (x*y)*^{-1}y = x. Constructed through check(), which verifies idempotence,
 * right-invertibility and self-distributivity exhaustively and reports the
 * lexicographically first witness on failure.
 */
class FiniteQuandle {
public:
    /// Validates the three quandle axioms and builds the inverse table.
    static FiniteQuandle check(const std::vector<std::vector<int>>& op_table,
                               std::vector<std::string> labels = {});

    int size() const { return size_; }
    int op(int x, int y) const { return op_[static_cast<size_t>(x) * size_ + y]; }
    int inv_op(int x, int y) const { return inv_op_[static_cast<size_t>(x) * size_ + y]; }

    /// Same element set under the inverse operation.
    FiniteQuandle dual() const;

    /// True iff op and inv_op coincide tablewise.
    bool is_kei() const { return op_ == inv_op_; }

    /// True iff x*y = x for all x,y.
    bool is_trivial() const;

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }

    /// Builds N x N tables from flat storage without re-running the axioms.
    /// Used internally where validity is already established.
    static FiniteQuandle from_tables_unchecked(int size, std::vector<int> op,
                                               std::vector<int> inv_op,
                                               std::vector<std::string> labels);

    static std::vector<std::vector<int>> trivial_table(int n);

private:
    FiniteQuandle() = default;

    int size_ = 0;
    std::vector<int> op_;      // row-major, op_[x*N+y]
    std::vector<int> inv_op_;
    std::vector<std::string> labels_;
};

bool is_automorphism(const FiniteQuandle& q, const Permutation& p);
bool is_antiautomorphism(const FiniteQuandle& q, const Permutation& p);

/// Cycle notation over the quandle's element labels; identity renders as "()".
std::string cycle_notation(const Permutation& p, const std::vector<std::string>& labels);

}  // namespace symq
