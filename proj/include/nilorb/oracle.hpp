#pragma once

#include "nilorb/algebra.hpp"
#include "nilorb/complexify.hpp"
#include "nilorb/orbit.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/rational_matrix.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace nilorb {

/// Matrix-level algebra membership used by the centralizer oracle.
enum class MatrixFamily { special_linear, special_orthogonal };

struct CentralizerReport {
  int algebra_dim = 0;
  int centralizer_dim = 0;
  int orbit_dim = 0;

  bool operator==(const CentralizerReport&) const = default;
};

/// Nilpotent matrix with upper Jordan blocks of the given sizes, in the
/// given order (top to bottom). Sizes need not be sorted.
inline RationalMatrix jordan_blocks_matrix(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("jordan_blocks_matrix: sizes must be positive");
    n += s;
  }
  RationalMatrix x(n, n);
  int offset = 0;
  for (int s : sizes) {
    for (int k = 0; k + 1 < s; ++k) x.at(offset + k, offset + k + 1) = 1;
    offset += s;
  }
  return x;
}

inline RationalMatrix jordan_representative(const Partition& lam) {
  if (lam.empty())
    throw std::invalid_argument("jordan_representative: partition must be nonempty");
  return jordan_blocks_matrix(lam.parts());
}

/// The fixed symmetric form for so(m,C): the anti-diagonal identity.
inline RationalMatrix orthogonal_form(int m) {
  RationalMatrix j(m, m);
  for (int i = 0; i < m; ++i) j.at(i, m - 1 - i) = 1;
  return j;
}

namespace detail {

/// Expected rank of the k-th power of a nilpotent matrix of Jordan type lam.
inline int expected_power_rank(const Partition& lam, int k) {
  int r = 0;
  for (int p : lam.parts()) r += std::max(p - k, 0);
  return r;
}

inline void check_nilpotent_of_type(const RationalMatrix& x, const Partition& lam,
                                    const char* who) {
  RationalMatrix power = x;
  for (int k = 1; k <= lam.part(0); ++k) {
    if (power.rank() != expected_power_rank(lam, k))
      throw std::logic_error(std::string(who) + ": rank sequence does not match " +
                             lam.to_string());
    if (k < lam.part(0)) power = power * x;
  }
}

}  // namespace detail

/// A rational nilpotent representative of Jordan type lam inside so(m,C)
/// with respect to the anti-diagonal form J, i.e. X^T J + J X = 0.
///
/// The matrix is assembled in an auxiliary basis in which the invariant form
/// is easy to write down, then conjugated back to the J basis:
///   - each part contributes one Jordan block, with an alternating-sign
///     anti-diagonal pairing on odd blocks and a cross pairing on the two
///     blocks of an even pair;
///   - middle vectors of odd blocks carry form value +1 or -1; two middles
///     of opposite value combine into a hyperbolic pair, so the assembled
///     form is congruent to J over the rationals;
///   - the congruence is written out explicitly, pair by pair.
/// The resulting entries are an implementation detail; the nilpotency type
/// and the form compatibility are re-verified before returning.
inline RationalMatrix orthogonal_representative(const Partition& lam, int m) {
  if (lam.total() != m)
    throw std::invalid_argument("orthogonal_representative: partition must sum to m");
  if (!detail::orthogonal_shape_valid(lam))
    throw std::invalid_argument(
        "orthogonal_representative: every even part needs even multiplicity");
  if (lam.empty())
    throw std::invalid_argument("orthogonal_representative: partition must be nonempty");

  std::vector<int> odd_parts;
  std::vector<int> even_parts;
  for (int p : lam.parts()) (p % 2 != 0 ? odd_parts : even_parts).push_back(p);

  // Block layout in the auxiliary basis, one Jordan block per part.
  struct Block {
    int offset = 0;
    int length = 0;
  };
  std::vector<Block> blocks;
  int cursor = 0;
  const auto add_block = [&](int length) {
    blocks.push_back(Block{cursor, length});
    cursor += length;
  };

  struct OddBlock {
    Block block;
    int middle_value = 0;  // form value at the middle basis vector
  };
  std::vector<OddBlock> odd_blocks;
  std::vector<std::pair<Block, Block>> even_pairs;

  for (std::size_t i = 0; i < odd_parts.size(); ++i) {
    add_block(odd_parts[i]);
    // middles alternate +1, -1 so that consecutive odd blocks pair up
    odd_blocks.push_back(OddBlock{blocks.back(), i % 2 == 0 ? 1 : -1});
  }
  for (std::size_t i = 0; i + 1 < even_parts.size(); i += 2) {
    add_block(even_parts[i]);
    const Block first = blocks.back();
    add_block(even_parts[i + 1]);
    even_pairs.emplace_back(first, blocks.back());
  }

  RationalMatrix x_aux(m, m);
  for (const Block& b : blocks)
    for (int k = 0; k + 1 < b.length; ++k) x_aux.at(b.offset + k, b.offset + k + 1) = 1;

  // Hyperbolic pairs (u, v) with B(u,u) = B(v,v) = 0 and B(u,v) = 1, as
  // sparse columns, plus the single self-paired center when m is odd.
  using Column = std::vector<std::pair<int, Rational>>;
  std::vector<std::pair<Column, Column>> pairs;
  Column center;

  for (const OddBlock& ob : odd_blocks) {
    const int l = ob.block.length;
    const int o = ob.block.offset;
    const int mid = (l - 1) / 2;
    // form on the block: B(e_{o+i}, e_{o+l-1-i}) = s * (-1)^i, middle = d
    const int s = ob.middle_value * (mid % 2 == 0 ? 1 : -1);
    for (int i = 0; i < mid; ++i) {
      const int value = s * (i % 2 == 0 ? 1 : -1);
      pairs.push_back({Column{{o + i, 1}}, Column{{o + l - 1 - i, value}}});
    }
  }
  for (std::size_t i = 0; i + 1 < odd_blocks.size(); i += 2) {
    // combine the +1 middle x and the -1 middle y: u = x + y, v = (x - y)/2
    const Block& a = odd_blocks[i].block;
    const Block& b = odd_blocks[i + 1].block;
    const int xa = a.offset + (a.length - 1) / 2;
    const int yb = b.offset + (b.length - 1) / 2;
    pairs.push_back({Column{{xa, 1}, {yb, 1}},
                     Column{{xa, Rational(1, 2)}, {yb, Rational(-1, 2)}}});
  }
  if (odd_blocks.size() % 2 != 0) {
    const Block& a = odd_blocks.back().block;
    center = Column{{a.offset + (a.length - 1) / 2, 1}};
  }
  for (const auto& [first, second] : even_pairs) {
    // cross form: B(e_{o1+i}, f_{o2+l-1-i}) = (-1)^i
    const int l = first.length;
    for (int i = 0; i < l; ++i) {
      const int value = i % 2 == 0 ? 1 : -1;
      pairs.push_back(
          {Column{{first.offset + i, 1}}, Column{{second.offset + l - 1 - i, value}}});
    }
  }

  if (static_cast<int>(pairs.size()) * 2 + static_cast<int>(center.size()) != m)
    throw std::logic_error("orthogonal_representative: basis bookkeeping failed");

  // Change of basis sending the global J pairing (t, m-1-t) onto the pairs.
  RationalMatrix t(m, m);
  const auto set_column = [&](int col, const Column& c) {
    for (const auto& [row, value] : c) t.at(row, col) = value;
  };
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    set_column(static_cast<int>(k), pairs[k].first);
    set_column(m - 1 - static_cast<int>(k), pairs[k].second);
  }
  if (!center.empty()) set_column((m - 1) / 2, center);

  const RationalMatrix x = t.inverse() * x_aux * t;

  // Verified postconditions; entries beyond these are unconstrained.
  const RationalMatrix j = orthogonal_form(m);
  if (!(x.transposed() * j + j * x).is_zero())
    throw std::logic_error("orthogonal_representative: form compatibility failed");
  detail::check_nilpotent_of_type(x, lam, "orthogonal_representative");
  return x;
}

/// Dimension of {eta in the algebra : [eta, xi] = 0}, computed as the exact
/// nullity of the combined linear system over the n^2 entries of eta.
inline CentralizerReport centralizer_dimension(const RationalMatrix& xi,
                                               MatrixFamily family) {
  if (xi.rows() != xi.cols())
    throw std::invalid_argument("centralizer_dimension: xi must be square");
  const int n = xi.rows();
  if (n == 0) throw std::invalid_argument("centralizer_dimension: xi is empty");

  CentralizerReport report;
  if (family == MatrixFamily::special_linear) {
    if (xi.trace() != 0)
      throw std::invalid_argument("centralizer_dimension: xi is not trace-free");
    // unknowns: the n^2 entries of eta, plus one trace equation
    const auto unknown = [n](int i, int j) { return i * n + j; };
    RationalMatrix system(n * n + 1, n * n);
    int r = 0;
    // [eta, xi]_{ij} = sum_k eta_{ik} xi_{kj} - xi_{ik} eta_{kj}
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          system.at(r, unknown(i, k)) += xi.at(k, j);
          system.at(r, unknown(k, j)) -= xi.at(i, k);
        }
        ++r;
      }
    }
    for (int i = 0; i < n; ++i) system.at(r, unknown(i, i)) = 1;
    report.algebra_dim = n * n - 1;
    report.centralizer_dim = nullity(system);
  } else {
    const RationalMatrix j = orthogonal_form(n);
    if (!(xi.transposed() * j + j * xi).is_zero())
      throw std::invalid_argument(
          "centralizer_dimension: xi is not compatible with the orthogonal form");
    // unknowns: coordinates of eta over the standard basis of so(J), the
    // matrices E_{ab} - E_{n-1-b,n-1-a} with (a,b) before its mirror image
    std::vector<std::pair<int, int>> basis;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ma = n - 1 - b;
        const int mb = n - 1 - a;
        if (std::pair(a, b) < std::pair(ma, mb)) basis.emplace_back(a, b);
      }
    }
    RationalMatrix system(n * n, static_cast<int>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto [a, b] = basis[k];
      const int ma = n - 1 - b;
      const int mb = n - 1 - a;
      // column k holds the vectorized commutator [E_ab - E_{ma,mb}, xi]
      const int col = static_cast<int>(k);
      for (int t = 0; t < n; ++t) {
        system.at(a * n + t, col) += xi.at(b, t);
        system.at(t * n + b, col) -= xi.at(t, a);
        system.at(ma * n + t, col) -= xi.at(mb, t);
        system.at(t * n + mb, col) += xi.at(t, ma);
      }
    }
    report.algebra_dim = n * (n - 1) / 2;
    report.centralizer_dim = nullity(system);
  }
  report.orbit_dim = report.algebra_dim - report.centralizer_dim;
  if (report.orbit_dim < 0)
    throw std::logic_error("centralizer_dimension: negative orbit dimension");
  return report;
}

/// Memo for orbit dimensions, keyed by family and partition. Explicit so
/// that callers own the cache; guarded by a mutex for concurrent sweeps.
class DimensionCache {
public:
  bool lookup(Family family, int n, const Partition& lam, int& out) const {
    const std::scoped_lock lock(mutex_);
    const auto it = memo_.find(Key{family, n, lam.parts()});
    if (it == memo_.end()) return false;
    out = it->second;
    return true;
  }

  void store(Family family, int n, const Partition& lam, int dim) {
    const std::scoped_lock lock(mutex_);
    memo_[Key{family, n, lam.parts()}] = dim;
  }

private:
  using Key = std::tuple<Family, int, std::vector<int>>;
  mutable std::mutex mutex_;
  std::map<Key, int> memo_;
};

/// Complex dimension of the orbit of a simple complex algebra with the given
/// underlying partition. Decorated pairs share the dimension of the
/// undecorated representative.
inline int orbit_partition_dimension(const SimpleAlgebra& g_complex,
                                     const Partition& lam,
                                     DimensionCache* cache = nullptr) {
  if (!g_complex.is_complex())
    throw std::invalid_argument("orbit_dimension: requires a complex algebra");
  int cached = 0;
  if (cache && cache->lookup(g_complex.family, g_complex.p, lam, cached)) return cached;

  CentralizerReport report;
  if (g_complex.family == Family::sl_complex) {
    if (lam.total() != g_complex.p)
      throw std::invalid_argument("orbit_dimension: partition does not sum to n");
    report = centralizer_dimension(jordan_representative(lam),
                                   MatrixFamily::special_linear);
  } else {
    report = centralizer_dimension(orthogonal_representative(lam, g_complex.p),
                                   MatrixFamily::special_orthogonal);
  }
  if (report.orbit_dim % 2 != 0)
    throw std::logic_error("orbit_dimension: complex orbit dimension must be even");
  if (cache) cache->store(g_complex.family, g_complex.p, lam, report.orbit_dim);
  return report.orbit_dim;
}

inline int orbit_dimension(const SimpleAlgebra& g_complex, const OrbitIndex& theta,
                           DimensionCache* cache = nullptr) {
  if (!validate_orbit(AlgebraSpec(g_complex), theta))
    throw std::invalid_argument("orbit_dimension: invalid orbit for " +
                                g_complex.to_string());
  return orbit_partition_dimension(g_complex, underlying_partition(theta), cache);
}

/// Real dimension of a real nilpotent orbit: the complex dimension of its
/// complexification, since the real centralizer is a real form of the
/// complex one. For sl(n,R) the rational system is additionally solved
/// directly as the real system and the two nullities are asserted equal
/// (rank is unchanged under field extension).
inline int real_orbit_dimension(const AlgebraSpec& g, const OrbitIndex& o,
                                DimensionCache* cache = nullptr) {
  const SimpleAlgebra& member = g.simple();
  if (member.is_complex())
    throw std::invalid_argument("real_orbit_dimension: requires a real form");
  if (!validate_orbit(g, o))
    throw std::invalid_argument("real_orbit_dimension: invalid orbit for " +
                                g.to_string());
  const OrbitIndex theta = complexify_orbit(g, o);
  const int dim = orbit_dimension(complexify_algebra(member), theta, cache);

  if (member.family == Family::sl_real) {
    const CentralizerReport direct = centralizer_dimension(
        jordan_representative(underlying_partition(o)), MatrixFamily::special_linear);
    if (direct.orbit_dim != dim)
      throw std::logic_error(
          "real_orbit_dimension: real and complex nullities disagree");
  }
  return dim;
}

struct FibreDimensionReport {
  int fibre_size = 0;
  int common_dim = -1;  // -1 when the fibre is empty
  bool equidimensional = true;
};

/// Computes the real orbit dimension of every element of fibre(g, theta) and
/// reports whether they all agree. An empty fibre is a vacuous success.
/// `real_orbits`, when given, must be enumerate_orbits(g).
inline FibreDimensionReport verify_fibre_equidimensional(
    const AlgebraSpec& g, const OrbitIndex& theta, DimensionCache* cache = nullptr,
    const std::vector<OrbitIndex>* real_orbits = nullptr) {
  const AlgebraSpec g_complex = complexify_algebra(g);
  if (!validate_orbit(g_complex, theta))
    throw std::invalid_argument("verify_fibre_equidimensional: invalid orbit for " +
                                g_complex.to_string());
  FibreDimensionReport report;
  const auto consider = [&](const OrbitIndex& o) {
    if (!(complexify_orbit(g, o) == theta)) return;
    const int dim = real_orbit_dimension(g, o, cache);
    if (report.fibre_size == 0)
      report.common_dim = dim;
    else if (dim != report.common_dim)
      report.equidimensional = false;
    ++report.fibre_size;
  };
  if (real_orbits) {
    for (const OrbitIndex& o : *real_orbits) consider(o);
  } else {
    for (const OrbitIndex& o : enumerate_orbits(g)) consider(o);
  }
  return report;
}

}  // namespace nilorb
