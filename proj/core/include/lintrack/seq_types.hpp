#ifndef LINTRACK_SEQ_TYPES_HPP
#define LINTRACK_SEQ_TYPES_HPP

#include <cstdint>
#include <vector>

#include "lintrack/spec.hpp"

namespace lintrack {

/// FIFO queue over positive integers. Enqueue(v) appends and acks;
/// Dequeue removes and returns the head, and is not enabled on the empty
/// queue. State: tuple of ints.
SequentialSpec queue_spec(const std::vector<int64_t>& values);

/// Union-find over elements [1..n]; the representative of a part is its
/// maximum element. Find(x) returns the representative, Unite(x,y) merges
/// and acks. State: tuple canon[1..n] in max-canonical form, so structural
/// state equality coincides with partition equality.
SequentialSpec union_find_spec(int n);

/// m-component single-writer single-scanner snapshot. Write(i,v) replaces
/// component i and acks; Scan returns a copy of the array. Components start
/// at 0 (a designated never-written value). State: tuple of m ints.
SequentialSpec snapshot_spec(int m, const std::vector<int64_t>& values);

}  // namespace lintrack

#endif
