#include "treewalk/report.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace treewalk {

namespace {

long long parse_digits(std::string_view s, std::string_view whole) {
    if (s.empty() || s.size() > 18) throw std::invalid_argument("bad rational '" + std::string(whole) + "'");
    long long v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument("bad rational '" + std::string(whole) + "'");
        }
        v = v * 10 + (ch - '0');
    }
    return v;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        long long p = parse_digits(text.substr(0, slash), text);
        long long q = parse_digits(text.substr(slash + 1), text);
        if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(p, q);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot), frac = text.substr(dot + 1);
        if (frac.empty() || int_part.size() + frac.size() > 18) {
            throw std::invalid_argument("bad rational '" + std::string(text) + "'");
        }
        long long scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        long long whole = int_part.empty() ? 0 : parse_digits(int_part, text);
        return Rational(whole * scale + parse_digits(frac, text), scale);
    }
    return Rational(parse_digits(text, text));
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_quantity(const Quantity& q) {
    auto num = boost::multiprecision::numerator(q);
    auto den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string_view to_string(Relation r) {
    switch (r) {
        case Relation::eq: return "==";
        case Relation::le: return "<=";
        case Relation::lt: return "<";
        case Relation::ge: return ">=";
        case Relation::gt: return ">";
    }
    return "?";
}

bool holds(const Quantity& lhs, Relation r, const Quantity& rhs) {
    switch (r) {
        case Relation::eq: return lhs == rhs;
        case Relation::le: return lhs <= rhs;
        case Relation::lt: return lhs < rhs;
        case Relation::ge: return lhs >= rhs;
        case Relation::gt: return lhs > rhs;
    }
    return false;
}

Check make_check(std::string instance, std::string quantity, Quantity lhs, Relation relation, Quantity rhs) {
    bool pass = holds(lhs, relation, rhs);
    return Check{std::move(instance), std::move(quantity), std::move(lhs), relation, std::move(rhs), pass};
}

std::size_t VerificationReport::violation_count() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

std::vector<Check> VerificationReport::violations() const {
    std::vector<Check> out;
    for (const Check& c : checks) {
        if (!c.pass) out.push_back(c);
    }
    return out;
}

void VerificationReport::sort() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const Check& a, const Check& b) { return a.instance < b.instance; });
    std::stable_sort(witnesses.begin(), witnesses.end(),
                     [](const Witness& a, const Witness& b) { return a.instance < b.instance; });
}

void VerificationReport::append(VerificationReport&& other) {
    checks.insert(checks.end(), std::make_move_iterator(other.checks.begin()),
                  std::make_move_iterator(other.checks.end()));
    witnesses.insert(witnesses.end(), std::make_move_iterator(other.witnesses.begin()),
                     std::make_move_iterator(other.witnesses.end()));
}

std::string report_csv(const VerificationReport& r) {
    std::string out = "instance,quantity,lhs,relation,rhs,pass\n";
    for (const Check& c : r.checks) {
        out += csv_field(c.instance) + ',' + csv_field(c.quantity) + ',' + format_quantity(c.lhs) + ',' +
               std::string(to_string(c.relation)) + ',' + format_quantity(c.rhs) + ',' + (c.pass ? "1" : "0") + '\n';
    }
    return out;
}

std::string report_json(const VerificationReport& r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["report"] = r.name;
    ordered_json scope = ordered_json::object();
    for (auto& [k, v] : r.scope) scope[k] = v;
    j["scope"] = scope;
    j["checks"] = r.checks.size();
    j["violations"] = r.violation_count();
    j["passed"] = r.passed();
    ordered_json bad = ordered_json::array();
    for (const Check& c : r.checks) {
        if (c.pass) continue;
        bad.push_back({{"instance", c.instance},
                       {"quantity", c.quantity},
                       {"lhs", format_quantity(c.lhs)},
                       {"relation", std::string(to_string(c.relation))},
                       {"rhs", format_quantity(c.rhs)}});
    }
    j["violating_checks"] = bad;
    ordered_json wit = ordered_json::array();
    for (const Witness& w : r.witnesses) {
        wit.push_back({{"instance", w.instance}, {"role", w.role}, {"code", w.code.code}});
    }
    j["witnesses"] = wit;
    return j.dump(2) + "\n";
}

}  // namespace treewalk
