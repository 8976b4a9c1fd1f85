#pragma once

#include "tlau/bimodule.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tlau {

/// Moore-Penrose inverse from a rank factorization; satisfies s g s = s.
Matrix generalized_inverse(const Matrix& s);

enum class DiagramKind { mono, epi };

/// A module map S between left C-modules that is injective (mono) or surjective (epi).
/// For injective lifting S : F -> K; for projective lifting S : K -> F.
struct Diagram {
    LeftModule source;
    LeftModule target;
    Matrix s;
    DiagramKind kind;
};

/// Throws ValidationError unless S intertwines and has the stated injectivity/surjectivity.
Diagram make_diagram(LeftModule source, LeftModule target, Matrix s, DiagramKind kind);

enum class LiftEquation { r_after_s, s_after_r };

struct LiftCertificate {
    Matrix r;
    LiftEquation equation;
};

struct LiftResult {
    std::optional<LiftCertificate> certificate;
    /// When no lift exists: y with y^T M = 0 and y^T b != 0 for the stacked constraint system M vec(R) = b.
    std::optional<Vector> witness;
    std::size_t unknowns = 0;
    std::size_t constraints = 0;
};

/// Injective problem: given S : F -> K mono and lambda : F -> E, find a module map R : K -> E with R S = lambda.
struct InjectiveProblem {
    Diagram diagram;
    LeftModule module;
    Matrix lambda;
};

/// Projective problem: given S : K -> F epi and lambda : P -> F, find a module map R : P -> K with S R = lambda.
struct ProjectiveProblem {
    Diagram diagram;
    LeftModule module;
    Matrix lambda;
};

LiftResult solve_injective_lift(const InjectiveProblem& p);
LiftResult solve_projective_lift(const ProjectiveProblem& p);

bool verify_lift(const InjectiveProblem& p, const Matrix& r);
bool verify_lift(const ProjectiveProblem& p, const Matrix& r);

/// Basis (as matrices) of the module maps source -> target.
std::vector<Matrix> module_hom_basis(const LeftModule& source, const LeftModule& target);

struct FlatnessProbe {
    Diagram diagram; // over the opposite algebra
    Matrix lambda;
};

struct FlatnessReport {
    std::vector<bool> passed;
    std::vector<std::optional<Vector>> witnesses;
    bool all_pass = true;
};

/// Runs each probe against K* with (f.c)(x) = f(c.x). Not a decision procedure.
FlatnessReport flatness_check(const LeftModule& k, const std::vector<FlatnessProbe>& probes);

/// Product problem for a factor problem: target module induced by sec2_left_actions and
/// lambda composed with a -> (a,0) (A side) or b -> (-T(b), b) (B side).
InjectiveProblem lift_injective_to_product(const LauProduct& l, Side side, const InjectiveProblem& factor);

/// R_A = p_A R (A side) or R_B = P_B R (B side). Throws CertificateInvalid.
LiftCertificate transfer_inj_product_to_factor(const LauProduct& l, Side side, const LiftCertificate& product,
                                               const InjectiveProblem& factor);

/// Factor problems of a product problem: restricted modules, lambda~ = theta_A lambda and mu~ = P_B lambda.
/// Throws ValidationError if a restriction is not a module.
std::pair<InjectiveProblem, InjectiveProblem> split_injective_problem(const LauProduct& l,
                                                                      const InjectiveProblem& product);

/// R = q_A R_A + eta_B R_B. Throws CertificateInvalid.
LiftCertificate transfer_inj_factors_to_product(const LauProduct& l, const LiftCertificate& a,
                                                const LiftCertificate& b, const InjectiveProblem& product);

/// Factor problems: restricted modules with lambda~(a) = lambda(a,0) and mu~(b) = lambda(0,b).
std::pair<ProjectiveProblem, ProjectiveProblem> split_projective_problem(const LauProduct& l,
                                                                         const ProjectiveProblem& product);

/// R = R_A p_A + R_B P_B. Throws CertificateInvalid.
LiftCertificate transfer_proj_factors_to_product(const LauProduct& l, const LiftCertificate& a,
                                                 const LiftCertificate& b, const ProjectiveProblem& product);

/// Factor problems for a problem whose target is A* x B*: blocks of the module and of lambda.
std::pair<InjectiveProblem, InjectiveProblem> split_flat_problem(const LauProduct& l,
                                                                 const InjectiveProblem& product);

/// R = q_{A*} R_{A*} + q_{B*} R_{B*}. Throws CertificateInvalid.
LiftCertificate transfer_flat(const LauProduct& l, const LiftCertificate& a_star, const LiftCertificate& b_star,
                              const InjectiveProblem& product);

} // namespace tlau
