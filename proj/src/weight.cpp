#include "bordism/weight.hpp"

#include "bordism/errors.hpp"

#include <sstream>

namespace bordism {

Weight::Weight(std::vector<int> m) : mu(std::move(m)) {
    if (is_zero()) throw PreconditionError("Weight: the zero vector names the trivial character");
}

bool Weight::is_zero() const {
    for (int x : mu)
        if (x != 0) return false;
    return true;
}

Weight Weight::dual() const {
    Weight w;
    w.mu.reserve(mu.size());
    for (int x : mu) w.mu.push_back(-x);
    return w;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i) os << ",";
        os << mu[i];
    }
    os << ")";
    return os.str();
}

Weight Weight::parse(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw ParseError("Weight: unbalanced parentheses in '" + s + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> mu;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw std::invalid_argument(tok);
            mu.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("Weight: bad entry '" + tok + "' in '" + s + "'");
        }
    }
    if (mu.empty()) throw ParseError("Weight: empty weight '" + s + "'");
    return Weight(std::move(mu));
}

} // namespace bordism
