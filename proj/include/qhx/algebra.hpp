#pragma once

// Generator catalogs of the similarity-transformation algebras, commutator
// tables computed from first principles, structure constants, the adjoint
// representation, and closure/ideal checks. Everything here is exact.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qhx/diffop.hpp"
#include "qhx/linalg.hpp"

namespace qhx::symop {

enum class Catalog { X, XBar, G, HeisenbergA, HeisenbergB, Sl2 };

struct UnknownIndexError : std::out_of_range {
    explicit UnknownIndexError(const std::string& what) : std::out_of_range(what) {}
};

struct NotClosedError : std::domain_error {
    std::string witness;
    explicit NotClosedError(std::string w)
        : std::domain_error("commutator leaves the span: " + w), witness(std::move(w)) {}
};

struct DependentBasisError : std::domain_error {
    DependentBasisError() : std::domain_error("basis is linearly dependent") {}
};

int catalog_size(Catalog c);
const char* catalog_name(Catalog c);
std::string basis_symbol(Catalog c, int index); // 1-based

// The exact differential operator for a catalog entry (1-based index).
DiffOperator generator(Catalog c, int index);
std::vector<DiffOperator> catalog_basis(Catalog c);

// index -> coefficient, zero coefficients omitted. Indices are 1-based.
using CoeffMap = std::map<int, GaussRat>;

std::string coeff_map_to_string(Catalog c, const CoeffMap& m);

// A finite linear combination of catalog generators.
struct AlgebraElement {
    Catalog catalog{};
    CoeffMap coeff;

    DiffOperator realize() const;
    std::string to_string() const { return coeff_map_to_string(catalog, coeff); }
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

// Entries keyed by (i, j) with i < j; antisymmetry supplies the rest.
struct CommutatorTable {
    Catalog catalog{};
    std::map<std::pair<int, int>, CoeffMap> entries;
};

// Throws NotClosedError if some bracket leaves the catalog's span.
CommutatorTable commutator_table(Catalog c);

struct ClosureResult {
    bool closed = true;
    std::optional<DiffOperator> witness;      // a commutator outside the span
    std::pair<int, int> witness_pair{0, 0};   // 1-based positions in the input list
};

// Pairs are scanned in order of the later element, so the witness is the
// first bracket that escapes as the list is grown front to back.
ClosureResult is_closed(const std::vector<DiffOperator>& ops);

// c[i][j][k] (0-based) with [b_i, b_j] = sum_k c[i][j][k] b_k.
using StructureConstants = std::vector<std::vector<std::vector<GaussRat>>>;

StructureConstants structure_constants(const std::vector<DiffOperator>& basis);

// (ad b_i) as an n x n matrix with entry [k][j] = c_ij^k.
std::vector<GMat> adjoint_rep(const std::vector<DiffOperator>& basis);

// True iff [b, s] stays in span(subset) for every basis b and subset s.
// subset holds 1-based positions into basis.
bool ideal_check(const std::vector<DiffOperator>& basis, const std::vector<int>& subset);

struct DiscrepancyEntry {
    int i = 0, j = 0;
    CoeffMap computed;
    CoeffMap reference;
    bool match = false;
};

struct DiscrepancyReport {
    std::string catalog;
    std::vector<DiscrepancyEntry> entries;
    std::vector<std::string> notes;

    int match_count() const {
        int n = 0;
        for (const auto& e : entries) n += e.match;
        return n;
    }
    bool all_match() const { return match_count() == static_cast<int>(entries.size()); }
};

// Recomputes the catalog's table and diffs it entry by entry against the
// built-in reference table. Mismatches are reported, never patched over.
DiscrepancyReport verify_against_reference(Catalog c);

// Internal consistency of the oracle itself: antisymmetry and the Jacobi
// identity over all catalog triples. Returns a human-readable failure, or
// nullopt when everything holds.
std::optional<std::string> oracle_self_check(Catalog c);

// [ad b_i, ad b_j] = sum_k c_ij^k ad b_k, exactly, for every pair.
bool adjoint_property_holds(const std::vector<DiffOperator>& basis);

// --- reference table data (one canonical definition, see reference_tables.cpp)

const std::map<std::pair<int, int>, CoeffMap>& reference_table(Catalog c);
const std::vector<std::string>& reference_notes(Catalog c);

} // namespace qhx::symop
