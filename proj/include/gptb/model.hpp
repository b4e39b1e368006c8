#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gptb/polytope.hpp"
#include "gptb/vec.hpp"

namespace gptb {

/// Linear functional mapping states to outcome probabilities.
struct Effect {
    Vec functional;
    std::string label;
};

/// Effects that sum to the unit effect.
struct Measurement {
    std::vector<Effect> effects;
};

/* A polygonal state-space model or a minimal-tensor-product composite of
 * such models.
 *
 * evengon(k) has 2k extreme states. For k == 2 these are the square's
 * corners (±1, ±1, 1) labeled w1..w4 clockwise from the top-right, which is
 * the labeling the rest of the library (extreme-channel tables, named
 * channels, folding) is written against; all data is exact. For k > 2 the
 * vertices are (cos(pi i/k), sin(pi i/k), 1), i = 1..2k, and the model is
 * float-valued since the coordinates are irrational.
 *
 * Composites carry the Kronecker-product vertices of their factors and a
 * V-representation only: the facets of a minimal tensor product involve
 * entangled effects that have no finite description here. */
class Model {
public:
    static Model evengon(unsigned k, std::optional<Scalar::Mode> mode = std::nullopt);
    static Model composite(std::vector<Model> factors);

    bool is_composite() const { return !factors_.empty(); }
    unsigned gon_k() const;
    const std::vector<Model>& factors() const { return factors_; }

    size_t dim() const { return dim_; }
    Scalar::Mode mode() const { return mode_; }
    double eps() const { return eps_; }

    /// Extreme states in label order (w1, w2, ...).
    const std::vector<Vec>& state_vertices() const { return vertices_; }
    const std::vector<std::string>& state_labels() const { return labels_; }
    const Polytope& state_polytope() const { return polytope_; }

    /// Extreme effects including the zero and unit effects.
    const std::vector<Effect>& effects() const { return effects_; }
    const Effect& unit_effect() const { return effects_.back(); }
    const Effect& effect(const std::string& label) const;

    /// Completely mixed state (0, 0, 1), or its n-fold Kronecker power.
    const Vec& mixed_state() const { return mixed_; }

    /// Index of the state vertex equal to the point, if any (0-based).
    std::optional<size_t> vertex_index(const Vec& point) const;

private:
    Model() = default;
    unsigned k_ = 0;
    size_t dim_ = 0;
    Scalar::Mode mode_ = Scalar::Mode::exact;
    double eps_ = 1e-9;
    std::vector<Model> factors_;
    std::vector<Vec> vertices_;
    std::vector<std::string> labels_;
    Polytope polytope_ = Polytope::from_vertices({Vec({Scalar::exact(1)})});
    std::vector<Effect> effects_;
    Vec mixed_ = Vec({Scalar::exact(1)});
};

void validate_measurement(const Measurement& m, const Model& owner);

/// Measurement {e1, e3} of the square (reads the second state coordinate).
Measurement measurement_m13(const Model& square);
/// Measurement {e2, e4} of the square (reads the first state coordinate).
Measurement measurement_m24(const Model& square);

/* State given by its two fiducial outcome probabilities; the embedded
 * vector is (2p-1, 2q-1, 1). */
struct TwoCoordState {
    Scalar p, q;
    TwoCoordState(Scalar p_, Scalar q_);
    static TwoCoordState from_vector(const Vec& state);
    Vec state_vector() const;
    Scalar::Mode mode() const { return p.mode(); }
};

/* The entangled two-square state
 * (w1⊗w2 - w2⊗w2 + w2⊗w3 + w3⊗w1) / 2, exact, dimension 9. Its marginals
 * are the completely mixed state, but it lies outside the hull of the 16
 * product vertices. */
Vec pr_entangled_state();

/// Partial evaluation of the unit effect on one side of a two-square state
/// (factor = 0 evaluates u on the second system, keeping the first).
Vec marginal(const Vec& two_square_state, size_t keep_factor);

}  // namespace gptb
