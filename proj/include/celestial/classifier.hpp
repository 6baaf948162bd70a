#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "celestial/catalog.hpp"
#include "celestial/lattice.hpp"

namespace celestial {

// Number of worker threads, capped by the CELESTIAL_THREADS environment variable.
unsigned thread_count();
// Runs task(0..n-1) on up to thread_count() threads; results keep their index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task);

// ------------------------------------------------------------------ census

struct Orbit {
    int ci = 0;
    Configuration representative;  // the tabulated one
    std::string dynkin;
    std::vector<Configuration> members;
};

struct Census {
    std::size_t configurations = 0;  // all simple-root configurations of B(5)
    std::vector<Orbit> orbits;       // ordered by CI
};

// Throws std::runtime_error unless there are exactly sixteen orbits, each
// containing exactly one tabulated representative.
const Census& census();
std::vector<C1Row> reproduce_table_c1();

// ------------------------------------------------------------------ tables

struct GCell {
    std::set<int> values;
    std::map<int, Configuration> witnesses;  // one configuration per value
    std::size_t stable = 0;                  // number of stable configurations
};
std::map<std::pair<int, int>, GCell> reproduce_table_g_detail();
std::map<std::pair<int, int>, std::set<int>> reproduce_table_g();

struct M4Generated {
    M4Row row;
    M4ClassRow classes;
    std::string key;  // equivalence key of the pair (F, G_R)
};
std::vector<M4Generated> reproduce_m4_tables();
// The equivalence key used to deduplicate m4 rows.
std::string m4_key(const Configuration& c, int ri);

// ------------------------------------------------------------ class solver

struct LinearConstraint {
    enum Rel { EQ, GE, LE };
    DivisorClass v;
    Rel rel = EQ;
    int value = 0;
};

struct ClassConstraints {
    std::vector<LinearConstraint> linear;
    std::optional<int> self;  // C^2 when given
};

class InfiniteSolutionSet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All classes C with |coordinates| <= bound satisfying the constraints.  The
// box is then doubled; new solutions there mean the set is not finite.
std::vector<DivisorClass> solve_class_constraints(const LatticeSpec& L, const ClassConstraints& cons, int bound = 6);

struct Decomposition {
    DivisorClass a;
    std::vector<DivisorClass> b;       // sorted multiset of classes in E(Y)
    std::vector<int> f_multiplicity;   // aligned with the configuration
    DivisorClass f;                    // sum of the configuration part
};

struct DecompositionProblem {
    LatticeSpec lattice;
    Configuration configuration;
    DivisorClass w;
    std::vector<DivisorClass> a_candidates;
    std::vector<DivisorClass> circles;  // G with G.(A+F) = 2 and G.F < 2
    std::size_t b_terms = 2;
    int max_multiplicity = 2;
};

std::vector<Decomposition> solve_decomposition(const DecompositionProblem& p);

// Multisets of k classes from pool summing to target, each sorted.
std::vector<std::vector<DivisorClass>> multiset_sums(const LatticeSpec& L, const DivisorClass& target,
                                                     const std::vector<DivisorClass>& pool, std::size_t k);

// ------------------------------------------------------------------ checks

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<Check> checks;
    std::vector<std::string> notes;
    bool ok() const;
    void add(const std::string& name, bool ok, const std::string& detail = "");
    std::string str() const;
    nlohmann::json to_json() const;
};

// The printed class sets for models of degree 8 and degree 4.
Report verify_class_sets();

struct TypeResult {
    int d = 0, c = 0;
    std::string status;  // "admissible", "lattice filter" or "asserted"
    std::string reason;
    int moebius_degree() const { return 2 * (d - c); }
};

struct AdmissibleTypes {
    std::vector<TypeResult> all;                     // every candidate with its status
    std::map<int, std::vector<std::pair<int, int>>> groups;  // Moebius degree -> admissible types
    std::map<int, std::string> max_families;         // Moebius degree -> "inf", "10", "2"
};
AdmissibleTypes admissible_types();
// Number of two-classes G with G.A = 2 for the best choice of a two-class A,
// over the generic configuration of B(9-d).
int circle_classes_against_absolute(int d);

Report verify_schicho_rows();

struct VerifyOptions {
    int samples = 3;
    bool round_trip = true;
};
Report verify_surface(const SurfaceRecord& rec, const VerifyOptions& opt = {});
std::vector<Report> verify_catalog(const VerifyOptions& opt = {});

// ------------------------------------------------------------- diffs

// Cell-level discrepancies against the expected tables, each with its citation.
std::vector<std::string> diff_table(const std::string& which);
const std::vector<std::string>& table_names();  // c1, g, m4, m4-classes, schicho, types
std::string table_text(const std::string& which);
nlohmann::json table_json(const std::string& which);

}  // namespace celestial
