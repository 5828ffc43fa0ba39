#include "bergman/multi_index.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

MultiIndex::MultiIndex(std::vector<int> components)
    : components_(std::move(components)) {
    for (int c : components_) {
        if (c < 0) throw std::invalid_argument("MultiIndex: negative component");
    }
}

MultiIndex::MultiIndex(std::initializer_list<int> components)
    : MultiIndex(std::vector<int>(components)) {}

int MultiIndex::order() const {
    int total = 0;
    for (int c : components_) total += c;
    return total;
}

double MultiIndex::log_factorial() const {
    double total = 0.0;
    for (int c : components_) total += bergman::log_factorial(c);
    return total;
}

double MultiIndex::factorial() const {
    if (order() <= 20) {
        double product = 1.0;
        for (int c : components_) {
            for (int j = 2; j <= c; ++j) product *= j;
        }
        return product;
    }
    return std::exp(log_factorial());
}

MultiIndex MultiIndex::zero(int n) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0));
}

MultiIndex MultiIndex::unit(int n, int axis) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    c.at(static_cast<std::size_t>(axis)) = 1;
    return MultiIndex(std::move(c));
}

bool GradedLex::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int oa = a.order();
    const int ob = b.order();
    if (oa != ob) return oa < ob;
    return a.components() < b.components();
}

double log_factorial(int k) {
    return std::lgamma(static_cast<double>(k) + 1.0);
}

double multinomial_weight(const MultiIndex& m) {
    const int k = m.order();
    if (k <= 20) {
        // Chained binomials keep every intermediate an exact integer.
        std::uint64_t value = 1;
        int remaining = k;
        for (int c : m.components()) {
            std::uint64_t binom = 1;
            for (int j = 1; j <= c; ++j) {
                binom = binom * static_cast<std::uint64_t>(remaining - c + j) /
                        static_cast<std::uint64_t>(j);
            }
            value *= binom;
            remaining -= c;
        }
        return static_cast<double>(value);
    }
    return std::exp(log_factorial(k) - m.log_factorial());
}

namespace {

void enumerate(int n, int order, std::vector<int>& prefix,
               std::vector<MultiIndex>& out) {
    if (static_cast<int>(prefix.size()) == n - 1) {
        prefix.push_back(order);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int c = 0; c <= order; ++c) {
        prefix.push_back(c);
        enumerate(n, order - c, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> homogeneous_indices(int n, int order) {
    if (n <= 0) throw std::invalid_argument("homogeneous_indices: n must be positive");
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    enumerate(n, order, prefix, out);
    return out;
}

} // namespace bergman
