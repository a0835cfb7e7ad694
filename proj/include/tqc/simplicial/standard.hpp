#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tqc/simplicial/smap.hpp"
#include "tqc/simplicial/sset.hpp"

namespace tqc::standard {

/// Name of the face of a standard simplex spanned by `vertices`, e.g. "013".
std::string face_name(std::span<const int> vertices);

/// The simplicial subset of Delta^m whose nondegenerate simplices are the
/// vertex sets accepted by `keep`; keep must be closed under subsets.
/// Generators are ordered by dimension, then lexicographically.
SSet subcomplex(int m, const std::function<bool(std::span<const int>)>& keep);

SSet simplex(int m);
SSet boundary(int m);
/// Lambda^m_k, for m >= 1 and 0 <= k <= m.
SSet horn(int m, int k);
SSet discrete(const std::vector<std::string>& names);

/// Inclusion of a subcomplex of Delta^m (named as above) into Delta^m.
SMap inclusion(SSetPtr sub, SSetPtr simplex);

}  // namespace tqc::standard
