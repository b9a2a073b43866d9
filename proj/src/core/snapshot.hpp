#pragma once

#include <string>

#include "core/field.hpp"

namespace rotslab {

/// Field snapshot file: little-endian header
///   magic "RSLB" | u32 version | u32 components | u32 nh | u32 nh | u32 nv
///   | f64 period | f64 ell | u32 representation (0 physical, 1 spectral)
/// followed by the raw float64 payload in (component, x1, x2, x3) order
/// (spectral payloads store re/im interleaved). 2-D fields carry nv = 1 and
/// ell = 0.
void save_field(const std::string& path, const Field3D& f, Repr repr = Repr::Physical);
void save_field(const std::string& path, const Field2D& f, Repr repr = Repr::Physical);
Field3D load_field3d(const std::string& path);
Field2D load_field2d(const std::string& path);

/// Checkpoint of a 3-D trajectory: "RSLC" header with the regime tuple and
/// time, followed by the density and velocity snapshots.
struct Checkpoint {
    double epsilon = 1.0;
    double ell = 1.0;
    double alpha = 0.0;
    double t = 0.0;
    Field3D rho;
    Field3D u;
};

void save_checkpoint(const std::string& path, const Checkpoint& c);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace rotslab
