#include "torquiv/variety.hpp"

#include "torquiv/errors.hpp"

namespace torquiv {

std::shared_ptr<const ToricVariety> ToricVariety::make(Fan fan, std::optional<IntMatrix> deg) {
    fan.validate();
    if (!is_complete(fan)) throw NotCompleteError("fan is not complete");
    const IntMatrix rays = fan.ray_matrix();
    const auto coker = cokernel_projection(rays);
    if (!coker.torsion.empty())
        throw TorsionClassGroupError("class group has torsion " + vec_string(coker.torsion));
    IntMatrix d;
    if (deg) {
        d = std::move(*deg);
        if (d.cols != rays.rows || d.rows != coker.rank)
            throw InvalidDegMatrixError("deg matrix has wrong shape");
        if (!mat_mul(d, rays).is_zero())
            throw InvalidDegMatrixError("deg does not annihilate the ray matrix");
        const auto inv = smith_normal_form(d).invariant_factors();
        if (static_cast<int>(inv.size()) != d.rows)
            throw InvalidDegMatrixError("deg is not of full rank");
        for (const auto& f : inv)
            if (f != 1) throw InvalidDegMatrixError("deg is not surjective over Z");
    } else {
        d = coker.proj;
    }
    auto x = std::shared_ptr<ToricVariety>(new ToricVariety());
    x->fan_ = std::move(fan);
    x->rays_ = rays;
    x->deg_ = std::move(d);
    return x;
}

IntVec ToricVariety::from_wdiv_to_cl(const IntVec& divisor) const {
    if (static_cast<int>(divisor.size()) != num_rays())
        throw LengthMismatchError("divisor vector has wrong length");
    return deg_.apply(divisor);
}

IntVec ToricVariety::lift(const IntVec& cls) const {
    if (static_cast<int>(cls.size()) != cl_rank())
        throw LengthMismatchError("class vector has wrong length");
    auto x = solve_integer(deg_, cls);
    if (!x) throw NoLiftError("class " + vec_string(cls) + " is not in the image of deg");
    return *x;
}

bool ToricVariety::is_line_bundle(const IntVec& cls) const {
    const IntVec d = lift(cls);
    for (const auto& cone : fan_.max_cones) {
        IntMatrix m(static_cast<int>(cone.size()), dim());
        IntVec rhs(cone.size());
        for (size_t i = 0; i < cone.size(); ++i) {
            for (int j = 0; j < dim(); ++j) m.at(static_cast<int>(i), j) = fan_.rays[cone[i]][j];
            rhs[i] = -d[cone[i]];
        }
        if (!solve_integer(m, rhs)) return false;
    }
    return true;
}

IntVec ToricVariety::anticanonical_class() const {
    return deg_.apply(IntVec(num_rays(), Int(1)));
}

}  // namespace torquiv
