#include "qza/state.hpp"

namespace qza {

std::string BasisVector::to_string() const {
    std::string s = "[";
    bool first = true;
    auto sep = [&] {
        if (!first) s += " ";
        first = false;
    };
    for (const auto& b : bosons) {
        sep();
        s += "g" + std::to_string(b[0]) + "." + std::to_string(b[1]) + "(-" +
             std::to_string(b[2]) + ")";
    }
    for (long long f : ferm2) {
        sep();
        s += "k(-" + Frac{f, 2}.to_string() + ")";
    }
    if (!lat.empty()) {
        sep();
        s += "e^(";
        for (size_t i = 0; i < lat.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(lat[i]);
        }
        s += ")";
        if (coset) s += "+c" + std::to_string(coset);
    } else if (coset) {
        sep();
        s += "c" + std::to_string(coset);
    }
    if (tag) {
        sep();
        s += "t" + std::to_string(tag);
    }
    if (first) s += "vac";
    s += "]";
    return s;
}

void state_add(State& into, const BasisVector& bv, const QRat& c) {
    if (c.is_zero()) return;
    auto it = into.find(bv);
    if (it == into.end()) {
        into.emplace(bv, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

void state_add(State& into, const State& other, const QRat& scale) {
    if (scale.is_zero()) return;
    for (const auto& [bv, c] : other) state_add(into, bv, c * scale);
}

State state_scaled(const State& s, const QRat& c) {
    State r;
    if (c.is_zero()) return r;
    for (const auto& [bv, co] : s) r.emplace(bv, co * c);
    return r;
}

bool state_is_zero(const State& s) { return s.empty(); }

bool state_equal(const State& a, const State& b) { return a == b; }

std::string state_to_string(const State& s, size_t max_terms) {
    if (s.empty()) return "0";
    std::string out;
    size_t shown = 0;
    for (const auto& [bv, c] : s) {
        if (shown == max_terms) {
            out += " + ... (" + std::to_string(s.size()) + " terms)";
            break;
        }
        if (shown) out += " + ";
        out += c.to_string() + "*" + bv.to_string();
        ++shown;
    }
    return out;
}

} // namespace qza
