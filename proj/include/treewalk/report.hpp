#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "treewalk/tree.hpp"

namespace treewalk {

/// Exact value compared by a check; integers and ratios alike.
using Quantity = boost::multiprecision::cpp_rational;

/// Family parameters such as c = 18/25.
using Rational = boost::rational<long long>;

/// Accepts `p/q`, integers and exact decimals (`0.72` -> 18/25). Never goes
/// through binary floating point. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);
std::string format_quantity(const Quantity& q);

enum class Relation { eq, le, lt, ge, gt };

std::string_view to_string(Relation r);
bool holds(const Quantity& lhs, Relation r, const Quantity& rhs);

struct Check {
    std::string instance;
    std::string quantity;
    Quantity lhs;
    Relation relation = Relation::eq;
    Quantity rhs;
    bool pass = false;
};

/// `pass` is always derived from lhs, relation and rhs.
Check make_check(std::string instance, std::string quantity, Quantity lhs, Relation relation, Quantity rhs);

struct Witness {
    std::string instance;
    std::string role;
    CanonicalCode code;
};

struct VerificationReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> scope;
    std::vector<Check> checks;
    std::vector<Witness> witnesses;

    std::size_t violation_count() const;
    std::vector<Check> violations() const;
    bool passed() const { return violation_count() == 0; }

    /// Stable sort of checks and witnesses by instance id.
    void sort();
    void append(VerificationReport&& other);
};

/// Header `instance,quantity,lhs,relation,rhs,pass`, one row per check.
std::string report_csv(const VerificationReport& r);

/// Summary: scope, check and violation counts, violating checks, witnesses.
std::string report_json(const VerificationReport& r);

}  // namespace treewalk
