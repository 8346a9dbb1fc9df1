#pragma once

#include <span>

#include "ballpoly/types.hpp"

namespace ballpoly::illumination {

/// Pairwise orthogonal unit directions.
struct Frame {
    Vec u, v, w;
};

Frame make_frame(const Vec& u, const Vec& v, const Tolerance& tol = {});

struct GaussImage {
    enum class Stratum { Vertex, EdgePoint, FacePoint };
    std::vector<Vec> generators;  // unit vectors x - z over touching centers
    Stratum stratum = Stratum::FacePoint;
    double spherical_diameter = 0.0;  // max pairwise angle, = 2 asin(d/2)
};

/// G(z) for a boundary point z of B[X] with diam(X) <= 1.
GaussImage gauss_image(std::span<const Vec> X, const Vec& z, const Tolerance& tol = {});

struct BlockWitness {
    Vec point;            // blocked boundary point
    std::string stratum;  // "vertex" / "edge" / "seam"
};

struct IlluminationResult {
    bool illuminated = false;
    std::vector<BlockWitness> witnesses;
};

/// Whether the six directions {+-u, +-v, +-w} illuminate B[X], decided per
/// boundary stratum: exact sign tests at vertices, exact sign-interval
/// analysis along edges and seams. Face interiors always pass (a unit
/// generator cannot be orthogonal to all three frame directions).
IlluminationResult illuminates_frame(std::span<const Vec> X, const Frame& f,
                                     const Tolerance& tol = {});

inline IlluminationResult illuminates_frame(const std::vector<Vec>& X, const Frame& f,
                                            const Tolerance& tol = {}) {
    return illuminates_frame(std::span<const Vec>(X), f, tol);
}

/// Rotation sweep about the prescribed direction u until an illuminating
/// orthogonal frame is found; the result self-certifies.
Frame find_frame(std::span<const Vec> X, const Vec& u, int sweep = 64,
                 const Tolerance& tol = {});

struct FrameExperiment {
    int trials = 0;
    int successes = 0;
    double ratio = 0.0;
    std::vector<Frame> failures;
};

/// Haar-random orthogonal frames (QR of Gaussian triples), seed-reproducible.
FrameExperiment random_frame_experiment(std::span<const Vec> X, int trials,
                                        unsigned seed, const Tolerance& tol = {});

/// Ray-based illumination check at z in direction d, by probing points
/// z + t d for small t > 0 against the interior of B[X].
bool ray_illuminates(std::span<const Vec> X, const Vec& z, const Vec& d,
                     const Tolerance& tol = {});

}  // namespace ballpoly::illumination
