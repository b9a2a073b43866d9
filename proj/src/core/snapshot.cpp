#include "core/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace rotslab {

namespace {

constexpr uint32_t kVersion = 1;

void put_u32(std::ostream& os, uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); }
void put_f64(std::ostream& os, double v) { os.write(reinterpret_cast<const char*>(&v), 8); }

uint32_t get_u32(std::istream& is) {
    uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), 4);
    return v;
}

double get_f64(std::istream& is) {
    double v = 0;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}

void write_header(std::ostream& os, const char magic[4], uint32_t ncomp, uint32_t nh, uint32_t nv,
                  double period, double ell, uint32_t repr) {
    os.write(magic, 4);
    put_u32(os, kVersion);
    put_u32(os, ncomp);
    put_u32(os, nh);
    put_u32(os, nh);
    put_u32(os, nv);
    put_f64(os, period);
    put_f64(os, ell);
    put_u32(os, repr);
}

struct Header {
    uint32_t ncomp, nh, nh2, nv, repr;
    double period, ell;
};

Header read_header(std::istream& is, const char expected_magic[4], const std::string& path) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, expected_magic, 4) != 0)
        throw IoError("bad magic in snapshot file " + path);
    if (get_u32(is) != kVersion) throw IoError("unsupported snapshot version in " + path);
    Header h;
    h.ncomp = get_u32(is);
    h.nh = get_u32(is);
    h.nh2 = get_u32(is);
    h.nv = get_u32(is);
    h.period = get_f64(is);
    h.ell = get_f64(is);
    h.repr = get_u32(is);
    if (!is || h.nh != h.nh2) throw IoError("corrupt snapshot header in " + path);
    return h;
}

void write_payload3(std::ostream& os, const Field3D& f, Repr repr) {
    if (repr == Repr::Physical) {
        const auto p = f.physical();
        os.write(reinterpret_cast<const char*>(p.data()), static_cast<std::streamsize>(p.size() * 8));
    } else {
        const auto s = f.spectral();
        os.write(reinterpret_cast<const char*>(s.data()), static_cast<std::streamsize>(s.size() * 16));
    }
}

Field3D read_field3(std::istream& is, const Header& h, const std::string& path) {
    SlabGeometry g(h.period, static_cast<int>(h.nh), static_cast<int>(h.nv), h.ell);
    const Repr repr = h.repr == 0 ? Repr::Physical : Repr::Spectral;
    Field3D f(g, static_cast<int>(h.ncomp), repr);
    if (repr == Repr::Physical) {
        auto p = f.physical_mut();
        is.read(reinterpret_cast<char*>(p.data()), static_cast<std::streamsize>(p.size() * 8));
    } else {
        auto s = f.spectral_mut();
        is.read(reinterpret_cast<char*>(s.data()), static_cast<std::streamsize>(s.size() * 16));
    }
    if (!is) throw IoError("truncated snapshot payload in " + path);
    return f;
}

}  // namespace

void save_field(const std::string& path, const Field3D& f, Repr repr) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path + " for writing");
    write_header(os, "RSLB", f.ncomp(), f.geom().nh, f.geom().nv, f.geom().period, f.geom().ell,
                 repr == Repr::Physical ? 0 : 1);
    write_payload3(os, f, repr);
    if (!os) throw IoError("write failed on " + path);
}

void save_field(const std::string& path, const Field2D& f, Repr repr) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path + " for writing");
    write_header(os, "RSLB", f.ncomp(), f.geom().nh, 1, f.geom().period, 0.0,
                 repr == Repr::Physical ? 0 : 1);
    if (repr == Repr::Physical) {
        const auto p = f.physical();
        os.write(reinterpret_cast<const char*>(p.data()), static_cast<std::streamsize>(p.size() * 8));
    } else {
        const auto s = f.spectral();
        os.write(reinterpret_cast<const char*>(s.data()), static_cast<std::streamsize>(s.size() * 16));
    }
    if (!os) throw IoError("write failed on " + path);
}

Field3D load_field3d(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open " + path);
    const Header h = read_header(is, "RSLB", path);
    if (h.nv < 5) throw IoError(path + " holds a 2-D snapshot, expected 3-D");
    return read_field3(is, h, path);
}

Field2D load_field2d(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open " + path);
    const Header h = read_header(is, "RSLB", path);
    if (h.nv != 1) throw IoError(path + " holds a 3-D snapshot, expected 2-D");
    // 2-D fields only need the horizontal part of the geometry.
    SlabGeometry g(h.period, static_cast<int>(h.nh), 17, 1.0);
    const Repr repr = h.repr == 0 ? Repr::Physical : Repr::Spectral;
    Field2D f(g, static_cast<int>(h.ncomp), repr);
    if (repr == Repr::Physical) {
        auto p = f.physical_mut();
        is.read(reinterpret_cast<char*>(p.data()), static_cast<std::streamsize>(p.size() * 8));
    } else {
        auto s = f.spectral_mut();
        is.read(reinterpret_cast<char*>(s.data()), static_cast<std::streamsize>(s.size() * 16));
    }
    if (!is) throw IoError("truncated snapshot payload in " + path);
    return f;
}

void save_checkpoint(const std::string& path, const Checkpoint& c) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path + " for writing");
    os.write("RSLC", 4);
    put_u32(os, kVersion);
    put_f64(os, c.epsilon);
    put_f64(os, c.ell);
    put_f64(os, c.alpha);
    put_f64(os, c.t);
    write_header(os, "RSLB", c.rho.ncomp(), c.rho.geom().nh, c.rho.geom().nv, c.rho.geom().period,
                 c.rho.geom().ell, 0);
    write_payload3(os, c.rho, Repr::Physical);
    write_header(os, "RSLB", c.u.ncomp(), c.u.geom().nh, c.u.geom().nv, c.u.geom().period,
                 c.u.geom().ell, 0);
    write_payload3(os, c.u, Repr::Physical);
    if (!os) throw IoError("write failed on " + path);
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "RSLC", 4) != 0) throw IoError("bad magic in checkpoint " + path);
    if (get_u32(is) != kVersion) throw IoError("unsupported checkpoint version in " + path);
    Checkpoint c;
    c.epsilon = get_f64(is);
    c.ell = get_f64(is);
    c.alpha = get_f64(is);
    c.t = get_f64(is);
    const Header hr = read_header(is, "RSLB", path);
    c.rho = read_field3(is, hr, path);
    const Header hu = read_header(is, "RSLB", path);
    c.u = read_field3(is, hu, path);
    return c;
}

}  // namespace rotslab
