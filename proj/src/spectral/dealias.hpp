#pragma once

#include <memory>
#include <vector>

#include "core/field.hpp"

namespace rotslab::spectral {

/// Alias-free pointwise products: 2/3-rule truncation in the horizontal
/// directions and padded collocation in the vertical. Factors are first
/// "prepared" (band-limited and evaluated on the padded grid); products of
/// prepared factors are then projected back to the working grid. Instances
/// are immutable and shareable.
class Dealiaser {
  public:
    explicit Dealiaser(const SlabGeometry& g);

    /// Largest retained horizontal mode magnitude.
    int keep_modes() const { return keep_; }

    /// Band-limited factor sampled on the (nh, nh, nv_pad) grid.
    std::vector<double> prepare(const Field3D& f, int comp) const;
    /// Product of two prepared factors, projected back to a scalar field.
    Field3D combine(const std::vector<double>& a, const std::vector<double>& b) const;
    /// Triple product.
    Field3D combine3(const std::vector<double>& a, const std::vector<double>& b,
                     const std::vector<double>& c) const;

    /// Convenience scalar product of two field components.
    Field3D product(const Field3D& a, int ca, const Field3D& b, int cb) const;

    /// Horizontal 2/3 truncation applied in place to a field's spectrum.
    void truncate(Field3D& f) const;
    void truncate(Field2D& f) const;

    static std::shared_ptr<const Dealiaser> get(const SlabGeometry& g);

  private:
    Field3D project_back(std::vector<double> padded_product) const;

    SlabGeometry geom_;
    int keep_ = 0;
    int nvp_ = 0;
    std::vector<double> coeffs_to_pad_;   // nvp x nv
    std::vector<double> pad_to_coeffs_;   // nv x nvp (transform then truncate)
};

/// 2-D variant: horizontal truncation only.
class Dealiaser2D {
  public:
    explicit Dealiaser2D(const SlabGeometry& g);

    Field2D product(const Field2D& a, int ca, const Field2D& b, int cb) const;
    void truncate(Field2D& f) const;

    static std::shared_ptr<const Dealiaser2D> get(const SlabGeometry& g);

  private:
    SlabGeometry geom_;
    int keep_ = 0;
};

}  // namespace rotslab::spectral
