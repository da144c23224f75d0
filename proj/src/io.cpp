#include "kronx/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace kronx::io {

namespace {

json big(const BigInt& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

BigInt read_big(const json& v) {
    if (v.is_number_unsigned()) return BigInt(std::to_string(v.get<unsigned long>()), 10);
    if (v.is_number_integer()) return BigInt(v.get<long>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        BigInt z;
        if (s.empty() || z.set_str(s, 10) != 0) throw DomainError("matrix json: bad integer '" + s + "'");
        return z;
    }
    throw DomainError("matrix json: expected an integer");
}

int read_index(const json& v, int n) {
    if (!v.is_number_integer()) throw DomainError("matrix json: index must be an integer");
    const long i = v.get<long>();
    if (i < 1 || i > n) throw DomainError("matrix json: index " + std::to_string(i) + " outside order");
    return static_cast<int>(i);
}

bool all_integers(const json& terms) {
    for (const auto& t : terms)
        for (std::size_t c = 2; c < t.size(); ++c)
            if (!(t[c].is_number_integer() || t[c].is_string())) return false;
    return true;
}

}  // namespace

json to_json(const XSum<Rational>& a) {
    json terms = json::array();
    for (const auto& [k, x] : a.terms()) terms.push_back({k.first, k.second, big(x.get_num()), big(x.get_den())});
    return {{"order", a.order()}, {"field", "rational"}, {"terms", terms}};
}

json to_json(const XSum<SqrtRational>& a) {
    json terms = json::array();
    for (const auto& [k, x] : a.terms())
        terms.push_back({k.first, k.second, x.sign(), big(x.radicand().get_num()), big(x.radicand().get_den())});
    return {{"order", a.order()}, {"field", "sqrt_rational"}, {"terms", terms}};
}

json to_json(const XSum<ComplexFloat>& a) {
    json terms = json::array();
    for (const auto& [k, x] : a.terms()) terms.push_back({k.first, k.second, x.real(), x.imag()});
    return {{"order", a.order()}, {"field", "complex"}, {"terms", terms}};
}

AnyMatrix from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("terms"))
        throw DomainError("matrix json: expected an object with 'order' and 'terms'");
    if (!j["order"].is_number_integer() || j["order"].get<long>() < 1)
        throw DomainError("matrix json: 'order' must be a positive integer");
    const long order = j["order"].get<long>();
    if (order > std::numeric_limits<int>::max()) throw DomainError("matrix json: order too large");
    const int n = static_cast<int>(order);
    const auto& terms = j["terms"];
    if (!terms.is_array()) throw DomainError("matrix json: 'terms' must be an array");

    std::string field;
    if (j.contains("field")) {
        if (!j["field"].is_string()) throw DomainError("matrix json: 'field' must be a string");
        field = j["field"].get<std::string>();
    } else {
        bool five = !terms.empty();
        for (const auto& t : terms) five = five && t.is_array() && t.size() == 5;
        field = five ? "sqrt_rational" : (all_integers(terms) ? "rational" : "complex");
    }
    const std::size_t width = field == "sqrt_rational" ? 5 : 4;
    for (const auto& t : terms)
        if (!t.is_array() || t.size() != width)
            throw DomainError("matrix json: each term must have " + std::to_string(width) + " entries");

    if (field == "rational") {
        XSum<Rational> a(n);
        for (const auto& t : terms) {
            const BigInt den = read_big(t[3]);
            if (den == 0) throw DomainError("matrix json: zero denominator");
            Rational q(read_big(t[2]), den);
            q.canonicalize();
            a.add_term(read_index(t[0], n), read_index(t[1], n), q);
        }
        return a;
    }
    if (field == "sqrt_rational") {
        XSum<SqrtRational> a(n);
        for (const auto& t : terms) {
            if (!t[2].is_number_integer()) throw DomainError("matrix json: sign must be an integer");
            const BigInt den = read_big(t[4]);
            if (den == 0) throw DomainError("matrix json: zero denominator");
            Rational q(read_big(t[3]), den);
            q.canonicalize();
            a.add_term(read_index(t[0], n), read_index(t[1], n), SqrtRational(t[2].get<int>(), q));
        }
        return a;
    }
    if (field == "complex") {
        XSum<ComplexFloat> a(n);
        for (const auto& t : terms) {
            if (!t[2].is_number() || !t[3].is_number()) throw DomainError("matrix json: complex parts must be numbers");
            a.add_term(read_index(t[0], n), read_index(t[1], n), make_complex(t[2].get<double>(), t[3].get<double>()));
        }
        return a;
    }
    throw DomainError("matrix json: unknown field '" + field + "'");
}

AnyMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DomainError("'" + path + "': " + e.what());
    }
    return from_json(j);
}

XSum<ComplexFloat> as_complex(const AnyMatrix& m) {
    return std::visit([](const auto& a) { return to_complex(a); }, m);
}

}  // namespace kronx::io
