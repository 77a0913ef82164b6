#include <omp.h>

#include <atomic>
#include <vector>

#include "rquant/mpoly.hpp"

namespace rquant::kernels {

namespace {

std::atomic<std::size_t> g_threshold{4096};

void accumulate_product(MPoly::Terms& out, const Exponents& ea, const Rat& ca,
                        const MPoly::Terms& b, Exponents& scratch) {
  for (const auto& [eb, cb] : b) {
    for (std::size_t i = 0; i < ea.size(); ++i) scratch[i] = ea[i] + eb[i];
    auto it = out.find(scratch);
    if (it == out.end()) {
      out.emplace(scratch, ca * cb);
    } else {
      it->second += ca * cb;
    }
  }
}

void merge_into(MPoly::Terms& dst, MPoly::Terms&& src) {
  if (dst.empty()) {
    dst = std::move(src);
    return;
  }
  for (auto& [e, c] : src) {
    auto [it, inserted] = dst.try_emplace(e, c);
    if (!inserted) it->second += c;
  }
}

void strip(MPoly::Terms& t) {
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

std::size_t parallel_threshold() { return g_threshold.load(); }
void set_parallel_threshold(std::size_t n) { g_threshold.store(n); }

MPoly::Terms mul_serial(const MPoly::Terms& a, const MPoly::Terms& b) {
  MPoly::Terms out;
  if (a.empty() || b.empty()) return out;
  Exponents scratch(a.begin()->first.size());
  for (const auto& [ea, ca] : a) accumulate_product(out, ea, ca, b, scratch);
  strip(out);
  return out;
}

MPoly::Terms mul_parallel(const MPoly::Terms& a, const MPoly::Terms& b) {
  if (a.empty() || b.empty()) return {};
  using Iter = MPoly::Terms::const_iterator;
  std::vector<Iter> left;
  left.reserve(a.size());
  for (auto it = a.begin(); it != a.end(); ++it) left.push_back(it);

  const int nthreads = omp_in_parallel() ? 1 : omp_get_max_threads();
  std::vector<MPoly::Terms> partial(static_cast<std::size_t>(nthreads));
  const auto n = static_cast<long>(left.size());
  const std::size_t width = a.begin()->first.size();

#pragma omp parallel num_threads(nthreads)
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    Exponents scratch(width);
#pragma omp for schedule(static)
    for (long i = 0; i < n; ++i) {
      const auto& [ea, ca] = *left[static_cast<std::size_t>(i)];
      accumulate_product(partial[tid], ea, ca, b, scratch);
    }
  }

  MPoly::Terms out;
  for (auto& p : partial) merge_into(out, std::move(p));
  strip(out);
  return out;
}

}  // namespace rquant::kernels
