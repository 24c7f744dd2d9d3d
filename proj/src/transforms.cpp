#include "fareykit/transforms.hpp"

namespace fareykit {

UnimodularMap::UnimodularMap(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (abs(determinant()) != 1) {
        throw Error(ErrorKind::BadMatrix, "determinant of " + to_string(*this) + " is not +-1");
    }
}

UnimodularMap UnimodularMap::inverse() const {
    Integer det = determinant();  // +-1, so the adjugate divided by det stays integral
    return {d_ * det, -b_ * det, -c_ * det, a_ * det};
}

UnimodularMap UnimodularMap::power(long long n) const {
    UnimodularMap base = n < 0 ? inverse() : *this;
    unsigned long long e = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
    UnimodularMap result = identity();
    while (e != 0) {
        if (e & 1ULL) {
            result = result * base;
        }
        base = base * base;
        e >>= 1;
    }
    return result;
}

UnimodularMap operator*(const UnimodularMap& f, const UnimodularMap& g) {
    return {f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_, f.c_ * g.a_ + f.d_ * g.c_,
            f.c_ * g.b_ + f.d_ * g.d_};
}

std::string to_string(const UnimodularMap& m) {
    return "[[" + m.a().str() + "," + m.b().str() + "],[" + m.c().str() + "," + m.d().str() + "]]";
}

UnimodularMap twist_map(const Slope& alpha) {
    const Integer& gx = alpha.x();
    const Integer& gy = alpha.y();
    return {1 + gx * gy, -gx * gx, gy * gy, 1 - gx * gy};
}

Slope apply_map(const UnimodularMap& m, const Slope& s) { return Slope::from_vector(m.apply(s.vector())); }

UnimodularMap reflection_map() { return {1, 0, 0, -1}; }

Slope reflect(const Slope& s) { return Slope::from_vector(s.x(), -s.y()); }

UnimodularMap mcg_case_map(int which) {
    // Vectors are (x, y) = (q, p).
    switch (which) {
    case 1: return UnimodularMap::identity();
    case 2: return {-1, 0, 0, -1};
    case 3: return {1, 0, 0, -1};
    case 4: return {-1, 0, 0, 1};
    default: throw Error(ErrorKind::BadCase, "mapping class case must be 1..4, got " + std::to_string(which));
    }
}

}  // namespace fareykit
