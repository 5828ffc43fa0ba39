#include "bergman/classifier.hpp"

#include <cmath>
#include <stdexcept>

#include "bergman/radial_ops.hpp"

namespace bergman {

namespace {

constexpr double kTieTolerance = 1e-9;

// The inclusion predicate A^p_alpha subset A^q_beta (possibly as equal sets
// when the parameters coincide).
bool bergman_subset(const SpaceParams& a, const SpaceParams& b) {
    if (a.p == b.p && a.alpha == b.alpha) return true;
    if (a.p <= b.p) {
        return (a.n + 1.0 + a.alpha) / a.p <= (b.n + 1.0 + b.alpha) / b.p;
    }
    return (1.0 + a.alpha) / a.p < (1.0 + b.alpha) / b.p;
}

} // namespace

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::equal: return "equal";
        case Relation::strict_subset: return "strict-subset";
        case Relation::strict_superset: return "strict-superset";
        case Relation::neither: return "neither";
    }
    return "?";
}

Relation inclusion_bergman(const SpaceParams& first, const SpaceParams& second) {
    first.validate();
    second.validate();
    if (first.n != second.n)
        throw std::invalid_argument("inclusion_bergman: dimension mismatch");
    if (first.p == second.p && first.alpha == second.alpha) return Relation::equal;
    if (bergman_subset(first, second)) return Relation::strict_subset;
    if (bergman_subset(second, first)) return Relation::strict_superset;
    return Relation::neither;
}

Relation inclusion_lipschitz(double alpha, double beta) {
    if (alpha == beta) return Relation::equal;
    return alpha > beta ? Relation::strict_subset : Relation::strict_superset;
}

Relation bergman_vs_lipschitz(double p, double alpha, double gamma, int n) {
    if (!(p > 0.0)) throw std::invalid_argument("bergman_vs_lipschitz: p must be positive");
    if (gamma < (1.0 + alpha) / p - kTieTolerance) return Relation::strict_subset;
    if (gamma >= (n + 1.0 + alpha) / p - kTieTolerance) return Relation::strict_superset;
    return Relation::neither;
}

LipschitzStretch lipschitz_stretch(double p, double alpha, int n) {
    if (!(p > 0.0)) throw std::invalid_argument("lipschitz_stretch: p must be positive");
    return {1.0 / p, (1.0 + alpha) / p, (n + 1.0 + alpha) / p};
}

TaylorPolynomial witness_ft(double t, int k, int n, int degree) {
    if (k < 1) throw std::invalid_argument("witness_ft: k must be >= 1");
    TaylorPolynomial out(n, degree);
    // (t+k)_j / j!, by recurrence; terminating parameters simply truncate.
    double binom = 1.0;
    for (int j = 1; j <= degree; ++j) {
        binom *= (t + k + (j - 1)) / j;
        std::vector<int> exponents(static_cast<std::size_t>(n), 0);
        exponents[0] = j;
        out.set_coefficient(MultiIndex(exponents),
                            binom * std::pow(static_cast<double>(j), -k));
    }
    return out;
}

bool ft_in_bergman(double t, const SpaceParams& sp) {
    sp.validate();
    return t < (sp.n + 1.0 + sp.alpha) / sp.p - kTieTolerance;
}

bool ft_in_growth_space(double t, double gamma) { return t <= gamma + kTieTolerance; }

TaylorPolynomial lacunary_series_n1(double coefficient_exponent, int blocks) {
    if (blocks < 0) throw std::invalid_argument("lacunary_series_n1: negative block count");
    const int degree = blocks == 0 ? 0 : (1 << blocks);
    TaylorPolynomial out(1, degree);
    for (int k = 1; k <= blocks; ++k) {
        out.set_coefficient(MultiIndex{1 << k},
                            std::pow(2.0, k * coefficient_exponent));
    }
    return out;
}

TaylorPolynomial lacunary_witness(double p, double alpha, int blocks) {
    if (!(p > 0.0)) throw std::invalid_argument("lacunary_witness: p must be positive");
    return lacunary_series_n1((1.0 + alpha) / p, blocks);
}

LacunaryGaps lacunary_series_gaps() { return {1.0, 2.0}; }

BlockGrowth lacunary_series_norms(double coefficient_exponent) {
    // At n = 1 the block H^p norms coincide with the coefficients.
    return BlockGrowth{1.0, std::pow(2.0, coefficient_exponent), 0.0, {}};
}

std::optional<WitnessChoice> separating_witness(const SpaceParams& first,
                                                const SpaceParams& second) {
    if (first.n != 1 || second.n != 1)
        throw std::invalid_argument("separating_witness: n = 1 only");
    if (inclusion_bergman(first, second) == Relation::strict_subset ||
        inclusion_bergman(first, second) == Relation::equal)
        return std::nullopt;

    const double lower_first = (1.0 + first.alpha) / first.p;
    const double lower_second = (1.0 + second.alpha) / second.p;
    WitnessChoice choice;
    if (lower_first > lower_second + kTieTolerance) {
        // Lacunary blocks 2^{k e} z^{2^k} with e strictly between the two
        // lower indices: summable against the first weight, not the second.
        choice.kind = "lacunary";
        choice.parameter = 0.5 * (lower_first + lower_second);
        const LacunaryGaps gaps = lacunary_series_gaps();
        const BlockGrowth norms = lacunary_series_norms(choice.parameter);
        choice.in_first = lacunary_bergman_test(gaps, norms, first);
        choice.in_second = lacunary_bergman_test(gaps, norms, second);
        return choice;
    }

    const double upper_first = (first.n + 1.0 + first.alpha) / first.p;
    const double upper_second = (second.n + 1.0 + second.alpha) / second.p;
    if (upper_first > upper_second + kTieTolerance) {
        choice.kind = "slice";
        choice.parameter = 0.5 * (upper_first + upper_second);
        choice.in_first = ft_in_bergman(choice.parameter, first)
                              ? Membership::member
                              : Membership::non_member;
        choice.in_second = ft_in_bergman(choice.parameter, second)
                               ? Membership::member
                               : Membership::non_member;
        return choice;
    }
    return std::nullopt;
}

void AtomSpec::validate() const {
    if (b == 0.0 || (b < 0.0 && std::abs(b - std::round(b)) <= kPoleTolerance))
        throw std::invalid_argument("AtomSpec: b must be neither 0 nor a negative integer");
}

Complex atom_eval(const AtomSpec& atom, const BallPoint& z) {
    atom.validate();
    return std::pow(1.0 - herm_pair(z, atom.location), Complex(-atom.b));
}

double atom_norm_asymptote(const AtomSpec& atom, const SpaceParams& sp) {
    atom.validate();
    sp.validate();
    const double a_sq = norm_sq(atom.location.coordinates());
    return std::pow(1.0 - a_sq, (sp.n + 1.0 + sp.alpha) / sp.p - atom.b);
}

Lattice lattice_generate(int n, double delta, int shells, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("lattice_generate: n must be >= 1");
    if (!(delta > 0.0)) throw std::invalid_argument("lattice_generate: delta must be positive");
    if (shells < 1) throw std::invalid_argument("lattice_generate: shells must be >= 1");

    Lattice lattice;
    lattice.separation = delta;
    lattice.shells = shells;
    lattice.seed = seed;

    for (int j = 1; j <= shells; ++j) {
        const double r = 1.0 - std::pow(2.0, -j);
        // Candidate count grows with the hyperbolic volume of the shell.
        const int candidates = std::max(
            8, static_cast<int>(std::ceil(8.0 * std::pow(2.0, j * n) /
                                          std::pow(delta, 2.0 * n))));
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(j));
        for (int i = 0; i < candidates; ++i) {
            CVector direction = sphere_point(n, rng);
            for (auto& c : direction) c *= r;
            BallPoint candidate(std::move(direction));
            bool separated = true;
            for (const BallPoint& kept : lattice.points) {
                if (bergman_dist(candidate, kept) < delta / 2.0) {
                    separated = false;
                    break;
                }
            }
            if (separated) lattice.points.push_back(std::move(candidate));
        }
    }

    // Post-generation verification of the separation invariant.
    for (std::size_t i = 0; i < lattice.points.size(); ++i) {
        for (std::size_t j = i + 1; j < lattice.points.size(); ++j) {
            if (bergman_dist(lattice.points[i], lattice.points[j]) < delta / 2.0)
                throw std::logic_error("lattice_generate: separation violated");
        }
    }
    return lattice;
}

SynthesisReport atomic_synthesize(const std::vector<double>& coefficients,
                                  const Lattice& lattice, double b,
                                  const SpaceParams& sp, const QuadratureSpec& quad) {
    sp.validate();
    quad.validate();
    if (coefficients.size() != lattice.points.size())
        throw std::invalid_argument("atomic_synthesize: coefficient count mismatch");
    const double bound = sp.n * std::max(1.0, 1.0 / sp.p) + (sp.alpha + 1.0) / sp.p;
    if (!(b > bound))
        throw std::invalid_argument("atomic_synthesize: b at or below the admissible bound");
    AtomSpec{BallPoint::origin(sp.n), b}.validate();

    const double shift = b - (sp.n + 1.0 + sp.alpha) / sp.p;
    std::vector<double> scales(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        const double a_sq = norm_sq(lattice.points[i].coordinates());
        scales[i] = coefficients[i] * std::pow(1.0 - a_sq, shift);
    }

    const int big_n = sp.smallest_n();
    auto radial_deriv = [&](std::span<const Complex> z) {
        Complex total(0.0);
        for (std::size_t i = 0; i < scales.size(); ++i) {
            if (scales[i] == 0.0) continue;
            const Complex x = herm_pair(
                z, std::span<const Complex>(lattice.points[i].coordinates()));
            total += scales[i] * power_atom_radial(b, big_n, x);
        }
        return total;
    };
    Complex at_zero(0.0);
    for (double scale : scales) at_zero += scale;

    SynthesisReport report;
    report.norm = bergman_norm_sampled(radial_deriv, at_zero, sp, quad,
                                       WeightConvention::automatic,
                                       NormMethod::monte_carlo);
    for (double c : coefficients) report.coefficient_sum += std::pow(std::abs(c), sp.p);
    if (report.coefficient_sum > 0.0)
        report.ratio = std::pow(report.norm.value, sp.p) / report.coefficient_sum;
    return report;
}

double multiplier_bound_probe(double p, double alpha, double beta,
                              const std::vector<TaylorPolynomial>& family,
                              const QuadratureSpec& quad) {
    if (!(p > 0.0)) throw std::invalid_argument("multiplier_bound_probe: p must be positive");
    double worst = 0.0;
    for (const TaylorPolynomial& f : family) {
        const SpaceParams source{f.dimension(), p, alpha};
        const SpaceParams target{f.dimension(), p, beta};
        const TaylorPolynomial image = power_multiplier(f, (beta - alpha) / p);
        double source_norm = 0.0;
        double image_norm = 0.0;
        if (p == 2.0) {
            source_norm = bergman_norm_p2(f, source);
            image_norm = bergman_norm_p2(image, target);
        } else {
            source_norm = bergman_norm(f, source, quad).value;
            image_norm = bergman_norm(image, target, quad).value;
        }
        if (source_norm > 0.0) worst = std::max(worst, image_norm / source_norm);
    }
    return worst;
}

} // namespace bergman
