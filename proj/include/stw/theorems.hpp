#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stw/fpmod.hpp"
#include "stw/series.hpp"

namespace stw::theorems {

struct LedgerRow {
    int degree = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool operator==(const LedgerRow& r) const
    {
        return degree == r.degree && lhs == r.lhs && rhs == r.rhs;
    }
};

enum class Status { Pass, Fail, Info };
std::string status_name(Status s);

struct CheckReport {
    std::string check;
    int max_degree = 0;
    Status status = Status::Fail;
    std::vector<LedgerRow> ledger;
    std::vector<std::string> notes;
    double ms = 0.0;

    bool failed() const { return status == Status::Fail; }
};

struct CensusEntry {
    enum class Kind { TrivialQuot, JokerQuot, Free };
    std::vector<int> J;  // nondecreasing parts >= 2; empty for the unit and for Free entries
    int nJ = 0;
    Kind kind = Kind::TrivialQuot;
    std::int64_t multiplicity = 1;
};
std::string kind_name(CensusEntry::Kind k);

// Shared reference series (all derived internally, no external tables).
series::PoincareSeries ps_k(int max_degree);        // H*(K)
series::PoincareSeries ps_a(int max_degree);        // Steenrod algebra
series::PoincareSeries ps_a1(int max_degree);       // A(1)
series::PoincareSeries ps_ko(int max_degree);       // A // A(1), by exact division
series::PoincareSeries ps_joker(int max_degree);    // A(1)/Sq^3, by realization
series::PoincareSeries ps_twisted(int max_degree);  // H*(K) (x) A

// The recurring cyclic quotients.
fpmod::Presentation twisted_quotient(const std::vector<steenrod::Elem>& a1_elems);
series::PoincareSeries ps_twisted_quotient(const std::vector<steenrod::Elem>& a1_elems,
                                           int max_degree);

CheckReport check_appendix();
CheckReport check_commutation(int max_degree);
CheckReport check_hopf();
CheckReport check_inverse(int max_degree);
CheckReport check_freeness(int max_degree);
CheckReport check_k2o(int max_degree);
CheckReport check_k2o2(int max_degree);
CheckReport check_sq3_kappa10();
CheckReport check_thom_twist(int max_degree, int num_vars);
std::pair<std::vector<CensusEntry>, CheckReport> abp_census(int max_degree);
CheckReport explore_conjecture(int max_degree);

}  // namespace stw::theorems
