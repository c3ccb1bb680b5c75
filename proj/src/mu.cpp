#include "bordism/mu.hpp"

#include <sstream>

namespace bordism {

std::string MuMonomial::str() const {
    if (exps.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "m" << (i + 1);
        if (exps[i] > 1) os << "^" << exps[i];
    }
    return os.str();
}

MuElement MuElement::from_rational(const Rational& q) {
    MuElement r;
    if (q != 0) r.terms_[MuMonomial{}] = q;
    return r;
}

MuElement MuElement::generator(int i, unsigned power) {
    MuElement r;
    if (power == 0) return one();
    std::vector<unsigned> e(static_cast<std::size_t>(i), 0);
    e.back() = power;
    r.terms_[MuMonomial{std::move(e)}] = 1;
    return r;
}

bool MuElement::is_rational_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MuElement::constant() const {
    auto it = terms_.find(MuMonomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

void MuElement::add_term(const MuMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MuElement MuElement::operator+(const MuElement& o) const {
    MuElement r = *this;
    r += o;
    return r;
}

MuElement& MuElement::operator+=(const MuElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MuElement MuElement::operator-(const MuElement& o) const {
    MuElement r = *this;
    r -= o;
    return r;
}

MuElement& MuElement::operator-=(const MuElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MuElement MuElement::operator-() const {
    MuElement r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MuElement MuElement::scaled(const Rational& q) const {
    MuElement r;
    if (q == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c * q;
    return r;
}

MuElement MuElement::mul(const MuElement& a, const MuElement& b, int cap) {
    MuElement r;
    for (const auto& [ma, ca] : a.terms_) {
        int da = ma.half_degree();
        for (const auto& [mb, cb] : b.terms_) {
            if (da + mb.half_degree() > cap) continue;
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

int MuElement::max_half_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.half_degree());
    return d;
}

std::optional<int> MuElement::homogeneous_half_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int h = m.half_degree();
        if (!d) d = h;
        else if (*d != h) return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
}

std::map<int, MuElement> MuElement::components() const {
    std::map<int, MuElement> r;
    for (const auto& [m, c] : terms_) r[m.half_degree()].add_term(m, c);
    return r;
}

MuElement MuElement::component(int half_degree) const {
    MuElement r;
    for (const auto& [m, c] : terms_)
        if (m.half_degree() == half_degree) r.add_term(m, c);
    return r;
}

std::string MuElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_one()) os << a.get_str();
        else if (a == 1) os << m.str();
        else os << a.get_str() << "*" << m.str();
    }
    return os.str();
}

} // namespace bordism
