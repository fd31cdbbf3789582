#pragma once

#include <span>
#include <string>
#include <vector>

#include "genocchi/models.hpp"

namespace genocchi {

// Bijections between the families, the two involutions on PD2N, DC and S,
// the reductions onto order n-1 and their inverses. All maps are pure. A
// map that produces an invalid object throws InternalError.

/// Ordered pool (j_1, ..., j_r) of the values not yet placed in the chain,
/// threaded through the steps of phi and its inverse.
class PoolState {
public:
    /// (n, n-1, ..., 1).
    static PoolState initial(int n);

    std::span<const int> entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    /// j_p, 1-based.
    int at(int p) const;
    /// p with j_p = value; 0 if absent.
    int position_of(int value) const;
    IndexSet as_set() const;

    /// Growth step consuming j_p: j_r moves into slot p, the pool shrinks by one.
    void consume(int p);
    /// Swap step consuming j_p and j_q (p < q): slot p takes j_r and slot q
    /// takes `returned` when q < r; slot p takes `returned` when q = r.
    void consume_pair(int p, int q, int returned);

    friend bool operator==(const PoolState&, const PoolState&) = default;

private:
    std::vector<int> entries_;
};

SetTuple chain_to_settuple(const FeiginChain& chain);

/// Step-by-step inverse: I_i = I_{i-1} + S_i when #S_i = 1, otherwise
/// (I_{i-1} \ {i}) + S_i.
FeiginChain settuple_to_chain(const SetTuple& tuple);

/// The same inverse from the closed form
/// I_i = (S_1 + ... + S_i) \ {j <= i : min S_j^{-1} < i < max S_j^{-1}}.
FeiginChain settuple_to_chain_closed_form(const SetTuple& tuple);

enum class PhiRule { grow_repeat, grow_fresh, swap };  // rules 1.a, 1.b, 2

struct PhiStep {
    int k = 0;
    PhiRule rule = PhiRule::grow_fresh;
    HetyeiPair pair;  // {u, v} at index n-k+1
    PoolState pool;   // L_k
};

struct PhiTrace {
    HetyeiTuple tuple;
    std::vector<PhiStep> steps;  // k = 1..n
};

HetyeiTuple phi(const FeiginChain& chain);
PhiTrace phi_trace(const FeiginChain& chain);
FeiginChain phi_inverse(const HetyeiTuple& tuple);

// (k, l) -> (l, k).
DumontPermutation involution_t(const DumontPermutation& sigma);
DellacConfiguration involution_t(const DellacConfiguration& dellac);
SetTuple involution_t(const SetTuple& tuple);

// (k, l) -> (n+1-l, n+1-k).
DumontPermutation involution_r(const DumontPermutation& sigma);
DellacConfiguration involution_r(const DellacConfiguration& dellac);
SetTuple involution_r(const SetTuple& tuple);

// From the class l = n at order n >= 2 onto the whole family at order n-1.
// Throws InvariantError for objects outside that class.
DumontPermutation reduce(const DumontPermutation& sigma);
DellacConfiguration reduce(const DellacConfiguration& dellac);
SetTuple reduce(const SetTuple& tuple);

// Inverses of reduce.
DumontPermutation lift(const DumontPermutation& sigma);
DellacConfiguration lift(const DellacConfiguration& dellac);
SetTuple lift(const SetTuple& tuple);

/// sigma -> ({sigma(1)}, ..., {sigma(n)}). Throws InvariantError unless
/// `sigma` is a permutation of [n].
SetTuple embed_permutation(std::span<const int> sigma);

// Variant forms; throw std::invalid_argument for models the map does not act on.
ModelObject involution_t(const ModelObject& object);
ModelObject involution_r(const ModelObject& object);
ModelObject reduce(const ModelObject& object);
ModelObject lift(const ModelObject& object);

/// Models on which t, r, reduce and lift act.
bool has_involutions(Model model);

}  // namespace genocchi
