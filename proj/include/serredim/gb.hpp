#pragma once

#include <vector>

#include "serredim/freemod.hpp"

namespace serredim {

/// Groebner basis of a submodule of R^rank (rank 1 = ideal case). When
/// `reduced` is set the elements are monic, mutually tail-reduced and sorted
/// ascending by lead term: the unique canonical form for (submodule, order).
struct GB {
    std::vector<FreeElem> elems;
    ModuleOrder order = ModuleOrder::pot(OrderKind::degrevlex);
    int rank = 1;
    bool reduced = false;
};

/// Full normal form. Divisors are tried in the stored sequence order, so the
/// result is deterministic.
FreeElem reduce(const Ring& R, const ModuleOrder& o, FreeElem f,
                const std::vector<FreeElem>& divisors);

struct Division {
    std::vector<Poly> quotients;  // one per divisor
    FreeElem remainder;
};

Division divide(const Ring& R, const ModuleOrder& o, FreeElem f,
                const std::vector<FreeElem>& divisors);

/// Buchberger with the normal pair strategy (minimal lcm degree, ties by
/// index pair); output is the reduced GB, bit-reproducible across runs.
GB buchberger(const Ring& R, const ModuleOrder& o, std::vector<FreeElem> gens, int rank);

/// Same, also expressing each basis element as a combination of the inputs:
/// gb.elems[k] = sum_i cofactors[k][i] * gens[i].
struct TrackedGB {
    GB gb;
    std::vector<FreeElem> cofactors;  // rank = ngens
    int ngens = 0;
};

TrackedGB buchberger_tracked(const Ring& R, const ModuleOrder& o,
                             std::vector<FreeElem> gens, int rank);

/// Syzygies of a Groebner basis via the Schreyer construction: one generator
/// per same-component pair, each certified by a full division.
std::vector<FreeElem> schreyer_syzygies(const Ring& R, const GB& gb);

/// Canonical (POT-degrevlex) GB of the syzygy module of gb's elements.
GB syzygy_module(const Ring& R, const GB& gb);

/// Canonical GB of the syzygy module of an arbitrary generator list.
GB syzygies_of_generators(const Ring& R, const std::vector<FreeElem>& gens, int rank);

bool gb_contains(const Ring& R, const GB& gb, const FreeElem& f);
bool gb_equal(const Ring& R, const GB& a, const GB& b);

// rank-1 conveniences
GB ideal_gb(const Ring& R, OrderKind o, const std::vector<Poly>& gens);
std::vector<Poly> gb_polys(const Ring& R, const GB& gb);
bool is_unit_ideal(const GB& gb);
bool ideal_contains(const Ring& R, const GB& gb, const Poly& f);
std::vector<FreeElem> polys_to_elems(const std::vector<Poly>& ps);

}  // namespace serredim
