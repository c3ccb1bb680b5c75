#include "bordism/json_io.hpp"

#include "bordism/errors.hpp"

#include <cctype>
#include <sstream>

namespace bordism {

namespace {

std::string exps_key(const std::vector<unsigned>& exps) {
    Json a = Json::array();
    for (unsigned e : exps) a.push_back(e);
    return a.dump();
}

std::string exps_key(const std::vector<int>& exps) {
    Json a = Json::array();
    for (int e : exps) a.push_back(e);
    return a.dump();
}

template <typename T>
std::vector<T> key_exps(const std::string& key) {
    Json a = Json::parse(key, nullptr, false);
    if (a.is_discarded() || !a.is_array()) throw ParseError("bad exponent-vector key '" + key + "'");
    std::vector<T> v;
    for (const auto& e : a) v.push_back(e.get<T>());
    return v;
}

Rational parse_rational(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw ParseError("bad rational '" + s + "'");
    }
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    throw ParseError("expected a rational as \"num/den\" string or integer");
}

} // namespace

Json to_json(const MuElement& x) {
    Json j = Json::object();
    for (const auto& [m, c] : x.terms()) j[exps_key(m.exps)] = c.get_str();
    return j;
}

MuElement mu_from_json(const Json& j, const ContextPtr& ctx) {
    MuElement x;
    if (j.is_string() || j.is_number_integer()) return MuElement::from_rational(rational_from_json(j));
    if (!j.is_object()) throw ParseError("MuElement: expected an object {exponents: rational}");
    for (const auto& [key, val] : j.items()) {
        MuMonomial m{key_exps<unsigned>(key)};
        if (m.half_degree() > ctx->truncation())
            throw ParseError("MuElement: monomial " + m.str() + " exceeds truncation N = " +
                             std::to_string(ctx->truncation()));
        x.add_term(m, rational_from_json(val));
    }
    return x;
}

Json to_json(const BorelSeries& s) {
    Json terms = Json::object();
    for (const auto& [m, c] : s.terms()) terms[exps_key(m.exps)] = to_json(c);
    return Json{{"rank", s.rank()}, {"trunc", s.truncation()}, {"terms", terms}};
}

BorelSeries borel_from_json(const Json& j, const ContextPtr& ctx) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("trunc"))
        throw ParseError("BorelSeries: expected {rank, trunc, terms}");
    BorelSeries s(ctx, j.at("rank").get<int>(), j.at("trunc").get<int>());
    if (j.contains("terms"))
        for (const auto& [key, val] : j.at("terms").items())
            s.add_term(CMonomial{key_exps<int>(key)}, mu_from_json(val, ctx));
    return s;
}

Json to_json(const LocalizedBorel& l) {
    Json den = Json::array();
    for (const auto& [w, e] : l.den) den.push_back(Json::array({w.str(), e}));
    return Json{{"num", to_json(l.num)}, {"den", den}};
}

LocalizedBorel localized_from_json(const Json& j, const ContextPtr& ctx) {
    if (!j.is_object() || !j.contains("num")) throw ParseError("LocalizedBorel: expected {num, den}");
    BorelSeries num = borel_from_json(j.at("num"), ctx);
    EulerDenominator den;
    if (j.contains("den"))
        for (const auto& entry : j.at("den")) {
            if (!entry.is_array() || entry.size() != 2) throw ParseError("LocalizedBorel: den entries are [weight, exp]");
            den[Weight::parse(entry[0].get<std::string>())] += entry[1].get<int>();
        }
    return LocalizedBorel(std::move(num), std::move(den));
}

Json to_json(const FixedDatum& x) {
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json t = Json::object();
        t["coef"] = to_json(c);
        if (!m.e_exp.empty()) {
            Json e = Json::object();
            for (const auto& [w, k] : m.e_exp) e[w.str()] = k;
            t["e"] = e;
        }
        if (!m.y_exp.empty()) {
            Json y = Json::array();
            for (const auto& [vd, mult] : m.y_exp)
                for (int i = 0; i < mult; ++i) y.push_back(Json::array({vd.first.str(), vd.second}));
            t["y"] = y;
        }
        terms.push_back(std::move(t));
    }
    return Json{{"terms", terms}};
}

namespace {

void parse_fixed_term(const Json& t, FixedDatum& out, const ContextPtr& ctx, int rank) {
    MuElement coef = t.contains("coef") ? mu_from_json(t.at("coef"), ctx) : MuElement::one();
    FixedMonomial m;
    if (t.contains("e"))
        for (const auto& [key, val] : t.at("e").items()) {
            Weight w = Weight::parse(key);
            if (rank && w.rank() != rank)
                throw ParseError("FixedDatum: weight " + w.str() + " has rank != " + std::to_string(rank));
            m = m * FixedMonomial::e(w, val.get<int>());
        }
    if (t.contains("y"))
        for (const auto& entry : t.at("y")) {
            if (!entry.is_array() || entry.size() < 2) throw ParseError("FixedDatum: y entries are [weight, level]");
            Weight w = Weight::parse(entry[0].get<std::string>());
            if (rank && w.rank() != rank)
                throw ParseError("FixedDatum: weight " + w.str() + " has rank != " + std::to_string(rank));
            int level = entry[1].get<int>();
            int mult = entry.size() >= 3 ? entry[2].get<int>() : 1;
            m = m * FixedMonomial::y(w, level, mult);
        }
    out.add_term(m, coef);
}

} // namespace

FixedDatum fixed_from_json(const Json& j, const ContextPtr& ctx, int rank) {
    FixedDatum x(ctx);
    if (j.is_object() && j.contains("terms")) {
        for (const auto& t : j.at("terms")) parse_fixed_term(t, x, ctx, rank);
    } else if (j.is_object()) {
        parse_fixed_term(j, x, ctx, rank); // single-term shorthand
    } else if (j.is_array()) {
        for (const auto& t : j) parse_fixed_term(t, x, ctx, rank);
    } else {
        throw ParseError("FixedDatum: expected {terms: [...]} or a single term object");
    }
    return x;
}

Json to_json(const ManifoldExpr& m) {
    switch (m.kind) {
        case ManifoldExpr::Kind::Point: return Json("point");
        case ManifoldExpr::Kind::Proj: {
            Json lines = Json::array();
            for (const auto& l : m.lines) {
                Json w = Json::array();
                for (int x : l) w.push_back(x);
                lines.push_back(std::move(w));
            }
            return Json::array({"proj", lines});
        }
        case ManifoldExpr::Kind::Product:
            return Json::array({"prod", to_json(m.children[0]), to_json(m.children[1])});
        case ManifoldExpr::Kind::Union: {
            Json a = Json::array({"union"});
            for (const auto& c : m.children) a.push_back(to_json(c));
            return a;
        }
    }
    throw ParseError("ManifoldExpr: malformed");
}

ManifoldExpr manifold_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "point") return ManifoldExpr::point();
        throw ParseError("ManifoldExpr: unknown atom '" + j.get<std::string>() + "'");
    }
    if (!j.is_array() || j.empty() || !j[0].is_string())
        throw ParseError("ManifoldExpr: expected \"point\" or [op, ...]");
    std::string op = j[0].get<std::string>();
    if (op == "proj") {
        if (j.size() != 2 || !j[1].is_array()) throw ParseError("proj: expected [\"proj\", [[w...]...]]");
        std::vector<std::vector<int>> lines;
        for (const auto& l : j[1]) {
            std::vector<int> w;
            for (const auto& e : l) w.push_back(e.get<int>());
            lines.push_back(std::move(w));
        }
        return ManifoldExpr::proj(std::move(lines));
    }
    if (op == "prod") {
        if (j.size() != 3) throw ParseError("prod: expected [\"prod\", A, B]");
        return ManifoldExpr::product(manifold_from_json(j[1]), manifold_from_json(j[2]));
    }
    if (op == "union") {
        std::vector<ManifoldExpr> parts;
        for (std::size_t i = 1; i < j.size(); ++i) parts.push_back(manifold_from_json(j[i]));
        return ManifoldExpr::disjoint_union(std::move(parts));
    }
    throw ParseError("ManifoldExpr: unknown operation '" + op + "'");
}

namespace {

struct SexprParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("sexpr at position " + std::to_string(pos) + ": " + msg);
    }

    char peek() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        return s[pos];
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    std::string atom() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '(' && s[pos] != ')')
            ++pos;
        if (start == pos) fail("expected an atom");
        return s.substr(start, pos - start);
    }

    int integer() {
        std::string a = atom();
        try {
            std::size_t used = 0;
            int v = std::stoi(a, &used);
            if (used != a.size()) throw std::invalid_argument(a);
            return v;
        } catch (const std::exception&) {
            fail("expected an integer, got '" + a + "'");
        }
    }

    std::vector<int> weight_list() {
        expect('(');
        std::vector<int> w;
        while (peek() != ')') w.push_back(integer());
        expect(')');
        return w;
    }

    ManifoldExpr expr() {
        if (peek() != '(') {
            std::string a = atom();
            if (a == "point") return ManifoldExpr::point();
            fail("unknown atom '" + a + "'");
        }
        expect('(');
        std::string op = atom();
        ManifoldExpr result;
        if (op == "proj") {
            expect('(');
            std::vector<std::vector<int>> lines;
            while (peek() != ')') lines.push_back(weight_list());
            expect(')');
            result = ManifoldExpr::proj(std::move(lines));
        } else if (op == "prod") {
            ManifoldExpr a = expr(), b = expr();
            result = ManifoldExpr::product(std::move(a), std::move(b));
        } else if (op == "union") {
            std::vector<ManifoldExpr> parts;
            while (peek() != ')') parts.push_back(expr());
            result = ManifoldExpr::disjoint_union(std::move(parts));
        } else {
            fail("unknown operation '" + op + "'");
        }
        expect(')');
        return result;
    }
};

} // namespace

ManifoldExpr manifold_from_sexpr(const std::string& s) {
    SexprParser p{s};
    ManifoldExpr m = p.expr();
    p.skip();
    if (p.pos != s.size()) throw ParseError("sexpr: trailing input at position " + std::to_string(p.pos));
    return m;
}

Json to_json(const Verdict& v) {
    Json integ = Json::object();
    integ["status"] = v.integrality_ok ? "pass" : "fail";
    integ["precision"] = v.precision;
    if (v.witness) {
        const char* kind = v.witness->kind == ObstructionKind::Pole      ? "pole"
                           : v.witness->kind == ObstructionKind::Rational ? "rational"
                                                                          : "lattice";
        integ["witness"] = Json{{"kind", kind},
                                {"degree", v.witness->degree},
                                {"monomial", exps_key(v.witness->where.exps)},
                                {"value", to_json(v.witness->value)}};
    }
    Json j{{"realizable", v.realizable()}, {"cone_ok", v.cone_ok}, {"integrality", integ}};
    if (v.constant_term) j["constant_term"] = to_json(*v.constant_term);
    if (!v.homogeneous_input) j["homogeneous"] = false;
    return j;
}

} // namespace bordism
