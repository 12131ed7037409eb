#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "torquiv/cones.hpp"
#include "torquiv/fan.hpp"

namespace torquiv {

// A complete normal toric variety with torsion-free class group: a fan plus
// a chosen presentation deg: Z^rays ->> Cl(X). Immutable after construction
// except for write-once combinatorial caches, which are mutex-guarded; all
// queries afterwards are pure.
class ToricVariety {
public:
    // Validates the fan, requires completeness and a torsion-free class
    // group. When deg is absent a deterministic cokernel basis is used;
    // a supplied deg must kill the ray matrix and be surjective over Z.
    static std::shared_ptr<const ToricVariety> make(Fan fan,
                                                    std::optional<IntMatrix> deg = std::nullopt);

    const Fan& fan() const { return fan_; }
    int dim() const { return fan_.dim; }
    int num_rays() const { return static_cast<int>(fan_.rays.size()); }
    int cl_rank() const { return deg_.rows; }
    const IntMatrix& deg() const { return deg_; }
    const IntMatrix& ray_matrix() const { return rays_; }

    // deg . D
    IntVec from_wdiv_to_cl(const IntVec& divisor) const;

    // Some torus-invariant divisor with the given class. Cannot fail for a
    // valid deg; throws NoLiftError if the class is outside the image.
    IntVec lift(const IntVec& cls) const;

    // Cartier test: on every maximal cone the lifted divisor is the pairing
    // with a single integral character.
    bool is_line_bundle(const IntVec& cls) const;

    IntVec anticanonical_class() const;

    // Write-once caches, populated on first use (defined alongside the
    // modules that compute them).
    const std::vector<ForbiddenSet>& forbidden_sets() const;
    const ConeRegion& cone_region(const std::vector<int>& rays) const;
    const std::vector<Wall>& walls() const;

    ToricVariety(const ToricVariety&) = delete;
    ToricVariety& operator=(const ToricVariety&) = delete;

private:
    ToricVariety() = default;

    Fan fan_;
    IntMatrix rays_;  // num_rays x dim
    IntMatrix deg_;   // cl_rank x num_rays

    mutable std::mutex cache_mu_;
    mutable std::optional<std::vector<ForbiddenSet>> forbidden_;
    mutable std::map<std::vector<int>, ConeRegion> regions_;
    mutable std::optional<std::vector<Wall>> walls_;
};

using VarietyPtr = std::shared_ptr<const ToricVariety>;

}  // namespace torquiv
