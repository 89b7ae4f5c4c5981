#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace fdpi::detail {

inline constexpr std::size_t kKaratsubaThreshold = 32;

// Ring must provide zero(), add(a, b), sub(a, b), mul(a, b) over T.

template <class T, class Ring>
void accumulate_schoolbook(std::span<const T> a, std::span<const T> b, std::span<T> out,
                           const Ring& ring) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
  }
}

template <class T, class Ring>
std::vector<T> add_padded(std::span<const T> a, std::span<const T> b, const Ring& ring) {
  std::vector<T> out(std::max(a.size(), b.size()), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = ring.add(out[i], b[i]);
  return out;
}

template <class T, class Ring>
std::vector<T> multiply(std::span<const T> a, std::span<const T> b, const Ring& ring) {
  if (a.empty() || b.empty()) return {};
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t n = a.size(), m = b.size();
  std::vector<T> out(n + m - 1, ring.zero());

  if (m < kKaratsubaThreshold) {
    accumulate_schoolbook<T>(a, b, out, ring);
    return out;
  }

  if (2 * m <= n) {
    // Unbalanced: slice the long operand into blocks of the short one.
    for (std::size_t off = 0; off < n; off += m) {
      const std::size_t len = std::min(m, n - off);
      auto part = multiply<T>(a.subspan(off, len), b, ring);
      for (std::size_t i = 0; i < part.size(); ++i) out[off + i] = ring.add(out[off + i], part[i]);
    }
    return out;
  }

  const std::size_t h = (n + 1) / 2;
  auto a0 = a.first(h), a1 = a.subspan(h);
  auto b0 = b.first(std::min(h, m)), b1 = m > h ? b.subspan(h) : std::span<const T>{};

  auto z0 = multiply<T>(a0, b0, ring);
  auto z2 = multiply<T>(a1, b1, ring);
  auto sa = add_padded<T>(a0, a1, ring);
  auto sb = add_padded<T>(b0, b1, ring);
  auto z1 = multiply<T>(std::span<const T>(sa), std::span<const T>(sb), ring);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = ring.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = ring.sub(z1[i], z2[i]);

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = ring.add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size() && h + i < out.size(); ++i)
    out[h + i] = ring.add(out[h + i], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] = ring.add(out[2 * h + i], z2[i]);
  return out;
}

}  // namespace fdpi::detail
