#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "genocchi/models.hpp"

namespace genocchi {

/// Slice of an enumeration: the branches of the first decision point with
/// more than one choice are dealt round-robin across `count` shards. The
/// shards of one enumeration partition it exactly.
struct Shard {
    unsigned index = 0;
    unsigned count = 1;
};

struct EnumerationOptions {
    int max_order = 8;  // resource guard; GuardError above it
    Shard shard{};
};

// Backtracking generators. Objects are produced in lexicographic order of
// their canonical serialization, each exactly once, without materializing
// the family. n must be >= 1.

void for_each_dumont(int n, const std::function<void(const DumontPermutation&)>& visit,
                     const EnumerationOptions& options = {});
void for_each_dellac(int n, const std::function<void(const DellacConfiguration&)>& visit,
                     const EnumerationOptions& options = {});
void for_each_chain(int n, const std::function<void(const FeiginChain&)>& visit,
                    const EnumerationOptions& options = {});
void for_each_settuple(int n, const std::function<void(const SetTuple&)>& visit,
                       const EnumerationOptions& options = {});
void for_each_hetyei(int n, const std::function<void(const HetyeiTuple&)>& visit,
                     const EnumerationOptions& options = {});

void enumerate(Model model, int n, const std::function<void(const ModelObject&)>& visit,
               const EnumerationOptions& options = {});

std::vector<ModelObject> enumerate_all(Model model, int n, const EnumerationOptions& options = {});

template <class T>
std::vector<T> enumerate_all_of(int n, const EnumerationOptions& options = {});

std::uint64_t count_objects(Model model, int n, const EnumerationOptions& options = {});

/// Runs `threads` shards concurrently and returns the canonical
/// serializations, sorted.
std::vector<std::string> enumerate_parallel(Model model, int n, unsigned threads,
                                            int max_order = EnumerationOptions{}.max_order);

}  // namespace genocchi
