#include "amalgam/poly.hpp"

#include <algorithm>
#include <sstream>

#include "amalgam/errors.hpp"

namespace amalgam {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw ArgumentError("empty variable name");
        if (!index_.emplace(names_[i], i).second)
            throw ArgumentError("duplicate variable name '" + names_[i] + "'");
    }
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t VarSet::index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw NameError("unknown variable '" + std::string(name) + "'");
}

VarSetPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

namespace {

bool same_universe(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || (a && b && a->names() == b->names());
}

}  // namespace

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace(Exponent{}, canonical(c));
}

Poly Poly::constant(VarSetPtr vars, const Rational& c) {
    Poly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Exponent(p.vars_->size(), 0), canonical(c));
    return p;
}

Poly Poly::variable(VarSetPtr vars, std::string_view name) {
    Poly p(std::move(vars));
    Exponent e(p.vars_->size(), 0);
    e[p.vars_->index(name)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::monomial(VarSetPtr vars, Exponent exp, const Rational& coef) {
    Poly p(std::move(vars));
    if (exp.size() != p.vars_->size()) throw DimensionError("exponent length does not match universe");
    if (coef != 0) p.terms_.emplace(std::move(exp), canonical(coef));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
}

Rational Poly::constant_term() const {
    if (terms_.empty()) return 0;
    const auto& [e, c] = *terms_.begin();  // the zero exponent is the lex-smallest key
    return std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; }) ? c : Rational(0);
}

unsigned Poly::total_degree() const {
    unsigned best = 0;
    for (const auto& [e, c] : terms_) {
        unsigned d = 0;
        for (auto k : e) d += k;
        best = std::max(best, d);
    }
    return best;
}

unsigned Poly::degree_in(std::string_view var) const {
    if (!vars_) throw NameError("unknown variable '" + std::string(var) + "'");
    const std::size_t v = vars_->index(var);
    unsigned best = 0;
    for (const auto& [e, c] : terms_) best = std::max<unsigned>(best, e[v]);
    return best;
}

void Poly::bind_to(const VarSetPtr& vars) {
    if (vars_ || !vars) return;
    vars_ = vars;
    if (terms_.empty()) return;
    Rational c = terms_.begin()->second;
    terms_.clear();
    terms_.emplace(Exponent(vars_->size(), 0), c);
}

void Poly::unify(Poly& other) {
    if (!vars_) {
        bind_to(other.vars_);
    } else if (!other.vars_) {
        other.bind_to(vars_);
    } else if (!same_universe(vars_, other.vars_)) {
        throw NameError("polynomials over different variable universes");
    }
}

void Poly::add_term(const Exponent& e, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    Poly rhs = o;
    unify(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    Poly rhs = o;
    unify(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly lhs = a;
    Poly rhs = b;
    lhs.unify(rhs);
    Poly out(lhs.vars_);
    if (lhs.terms_.empty() || rhs.terms_.empty()) return out;
    Exponent e;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    Poly lhs = a;
    Poly rhs = b;
    if (lhs.vars_ && rhs.vars_ && !same_universe(lhs.vars_, rhs.vars_)) return false;
    lhs.unify(rhs);
    return lhs.terms_ == rhs.terms_;
}

Poly Poly::diff(std::string_view var) const {
    if (!vars_) throw NameError("unknown variable '" + std::string(var) + "'");
    const std::size_t v = vars_->index(var);
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponent d = e;
        --d[v];
        out.add_term(d, c * e[v]);
    }
    return out;
}

Poly Poly::coefficient(std::span<const std::pair<std::string, unsigned>> assignments) const {
    if (assignments.empty()) return *this;
    if (!vars_) throw NameError("unknown variable '" + assignments.front().first + "'");
    std::vector<std::pair<std::size_t, unsigned>> idx;
    for (const auto& [name, deg] : assignments) {
        const std::size_t v = vars_->index(name);
        for (const auto& [w, d] : idx) {
            if (w == v) throw ArgumentError("variable '" + name + "' listed twice");
        }
        idx.emplace_back(v, deg);
    }
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
        bool match = true;
        for (const auto& [v, deg] : idx) match = match && e[v] == deg;
        if (!match) continue;
        Exponent r = e;
        for (const auto& [v, deg] : idx) r[v] = 0;
        out.add_term(r, c);
    }
    return out;
}

Rational Poly::evaluate(const std::map<std::string, Rational, std::less<>>& point) const {
    std::vector<const Rational*> value;
    if (vars_) {
        value.assign(vars_->size(), nullptr);
        for (const auto& [name, q] : point) value[vars_->index(name)] = &q;
    } else if (!point.empty()) {
        throw NameError("unknown variable '" + point.begin()->first + "'");
    }
    Rational total = 0;
    Rational term;
    Rational pw;
    for (const auto& [e, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!value[i]) throw NameError("variable '" + vars_->name(i) + "' is not assigned");
            mpz_pow_ui(pw.get_num_mpz_t(), value[i]->get_num_mpz_t(), e[i]);
            mpz_pow_ui(pw.get_den_mpz_t(), value[i]->get_den_mpz_t(), e[i]);
            term *= pw;
        }
        total += term;
    }
    return total;
}

Poly Poly::substitute(const std::map<std::string, Poly, std::less<>>& values,
                      const VarSetPtr& target) const {
    std::vector<const Poly*> image;
    if (vars_) {
        image.assign(vars_->size(), nullptr);
        for (const auto& [name, p] : values) image[vars_->index(name)] = &p;
    }
    // Cache powers per variable: substitution is usually applied to many terms sharing factors.
    std::vector<std::vector<Poly>> powers(image.size());
    auto power = [&](std::size_t v, unsigned k) -> const Poly& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Poly::constant(target, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * *image[v]);
        return cache[k];
    };
    Poly out(target);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!image[i]) throw NameError("variable '" + vars_->name(i) + "' is not assigned");
            term *= power(i, e[i]);
        }
        out += term;
    }
    return out;
}

Poly Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    Poly rem = *this;
    Poly div = d;
    rem.unify(div);
    Poly quot(rem.vars_);
    const auto& [lead_e, lead_c] = *div.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        Exponent q(re.size(), 0);
        for (std::size_t i = 0; i < re.size(); ++i) {
            if (re[i] < lead_e[i]) throw DomainError("polynomial division is not exact");
            q[i] = re[i] - lead_e[i];
        }
        Rational qc = rc / lead_c;
        Poly step(rem.vars_);
        step.terms_.emplace(std::move(q), qc);
        quot += step;
        rem -= step * div;
    }
    return quot;
}

namespace {

std::string monomial_text(const VarSetPtr& vars, const Exponent& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars->name(i);
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const std::string mono = vars_ ? monomial_text(vars_, e) : std::string();
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (mono.empty()) {
            out += amalgam::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += amalgam::to_string(mag) + '*' + mono;
        }
    }
    return out;
}

}  // namespace amalgam
