#include "torquiv/ints.hpp"

#include <sstream>

#include "torquiv/errors.hpp"

namespace torquiv {

namespace {
void check_same_size(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw LengthMismatchError("vector length mismatch: " + std::to_string(a.size()) +
                                  " vs " + std::to_string(b.size()));
}
}  // namespace

IntVec vec_add(const IntVec& a, const IntVec& b) {
    check_same_size(a, b);
    IntVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    check_same_size(a, b);
    IntVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVec vec_neg(const IntVec& a) {
    IntVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

IntVec vec_scaled(const IntVec& a, const Int& c) {
    IntVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

Int vec_dot(const IntVec& a, const IntVec& b) {
    check_same_size(a, b);
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool vec_is_zero(const IntVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

Int vec_content(const IntVec& a) {
    Int g = 0;
    for (const auto& x : a) g = boost::multiprecision::gcd(g, x);
    return g < 0 ? Int(-g) : g;
}

std::string vec_string(const IntVec& a) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ", ";
        os << a[i];
    }
    os << "}";
    return os.str();
}

}  // namespace torquiv
