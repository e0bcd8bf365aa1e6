#include "qsf/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qsf {

Laurent Laurent::term(const Cyc& c, int e) {
    Laurent r;
    if (!c.is_zero()) r.t_[e] = c;
    return r;
}

Cyc Laurent::coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Cyc() : it->second;
}

Laurent Laurent::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("Laurent: inverse of a non-unit");
    auto& [e, c] = *t_.begin();
    return term(c.inverse(), -e);
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (auto& [e, c] : t_) r.t_[e] = -c;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (auto& [e, c] : o.t_) {
        auto [it, fresh] = t_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    return *this += -o;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [ea, ca] : t_)
        for (auto& [eb, cb] : o.t_) {
            Cyc p = ca * cb;
            if (p.is_zero()) continue;
            auto [it, fresh] = r.t_.try_emplace(ea + eb, p);
            if (!fresh) {
                it->second += p;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    return r;
}

std::string Laurent::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e != 0) os << "*pi^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) {
    return os << p.str();
}

}  // namespace qsf
