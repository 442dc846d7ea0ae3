#include "babylon/edge_cache.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "babylon/numthy.hpp"

namespace babylon {

std::string render_edge_cache(std::uint32_t n, const std::vector<Edge>& edges) {
  std::string out = "babylon-edges v1 n=" + std::to_string(n) + "\n";
  for (const Edge& e : edges) {
    u64 c = isqrt(static_cast<u64>(e.a) * e.a + static_cast<u64>(e.b) * e.b);
    out += std::to_string(e.a) + ' ' + std::to_string(e.b) + ' ' + std::to_string(c) + '\n';
  }
  return out;
}

void write_edge_cache(const std::string& path, std::uint32_t n, const std::vector<Edge>& edges) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open cache for writing: " + path);
  f << render_edge_cache(n, edges);
  if (!f) throw std::runtime_error("short write to cache: " + path);
}

EdgeCache read_edge_cache(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open cache: " + path);
  std::string header;
  std::getline(f, header);
  const std::string prefix = "babylon-edges v1 n=";
  if (header.rfind(prefix, 0) != 0)
    throw std::runtime_error("bad cache header in " + path);
  EdgeCache cache;
  {
    std::uint32_t n = 0;
    auto [ptr, ec] =
        std::from_chars(header.data() + prefix.size(), header.data() + header.size(), n);
    if (ec != std::errc{} || n == 0) throw std::runtime_error("bad cache header in " + path);
    cache.n = n;
  }
  std::string line;
  Edge prev{0, 0};
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const char* p = line.data();
    const char* end = p + line.size();
    u64 vals[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i) {
      while (p < end && *p == ' ') ++p;
      auto [next, ec] = std::from_chars(p, end, vals[i]);
      if (ec != std::errc{}) throw std::runtime_error("bad cache row: " + line);
      p = next;
    }
    auto [a, b, c] = vals;
    if (a == 0 || a >= b || b > cache.n) throw std::runtime_error("cache row out of range: " + line);
    if (a * a + b * b != c * c) throw std::runtime_error("cache row fails a^2+b^2=c^2: " + line);
    Edge e{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    if (!(prev < e)) throw std::runtime_error("cache rows not sorted: " + line);
    prev = e;
    cache.edges.push_back(e);
  }
  return cache;
}

}  // namespace babylon
