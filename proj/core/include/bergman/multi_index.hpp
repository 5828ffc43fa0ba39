#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace bergman {

/// An n-tuple of nonnegative integers indexing the monomial z^m.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> components);
    MultiIndex(std::initializer_list<int> components);

    int dimension() const { return static_cast<int>(components_.size()); }

    /// |m| = m_1 + ... + m_n.
    int order() const;

    int operator[](std::size_t i) const { return components_[i]; }
    const std::vector<int>& components() const { return components_; }

    /// log(m!) = sum of log(m_i!).
    double log_factorial() const;

    /// m! as a double; exact whenever it fits in a 53-bit mantissa,
    /// otherwise formed through log_factorial.
    double factorial() const;

    static MultiIndex zero(int n);
    static MultiIndex unit(int n, int axis);

    bool operator==(const MultiIndex&) const = default;

private:
    std::vector<int> components_;
};

/// Graded lexicographic order: ascending |m|, lexicographic within each
/// order. Every series operation iterates coefficients in this order, which
/// pins down summation results bit for bit.
struct GradedLex {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// log(k!).
double log_factorial(int k);

/// |m|!/m!. Exact integer arithmetic for |m| <= 20, log-space beyond that.
double multinomial_weight(const MultiIndex& m);

/// Enumerates all multi-indices of dimension n with |m| = order,
/// lexicographically.
std::vector<MultiIndex> homogeneous_indices(int n, int order);

} // namespace bergman
