#include <cstdlib>
#include <string>

#include "dsdkit/kernels.hpp"

namespace dsdkit::kern {

const Ops* avx2_ops();  // nullptr unless built with AVX2+FMA
const Ops* neon_ops();  // nullptr unless built for aarch64

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

struct Backend {
  const char* name;
  const Ops* table;
};

Backend select() {
  const Ops* avx2 = cpu_has_avx2() ? avx2_ops() : nullptr;
  const Ops* neon = neon_ops();

  const char* env = std::getenv("DSDKIT_SIMD");
  const std::string want = env ? env : "auto";
  if (want == "scalar") return {"scalar", &scalar_ops()};
  if (want == "avx2" && avx2) return {"avx2", avx2};
  if (want == "neon" && neon) return {"neon", neon};

  if (avx2) return {"avx2", avx2};
  if (neon) return {"neon", neon};
  return {"scalar", &scalar_ops()};
}

const Backend& active() {
  static const Backend backend = select();
  return backend;
}

}  // namespace

const Ops& ops() { return *active().table; }

const char* backend_name() { return active().name; }

std::vector<std::pair<const char*, const Ops*>> available_backends() {
  std::vector<std::pair<const char*, const Ops*>> out;
  out.emplace_back("scalar", &scalar_ops());
  if (cpu_has_avx2() && avx2_ops()) out.emplace_back("avx2", avx2_ops());
  if (neon_ops()) out.emplace_back("neon", neon_ops());
  return out;
}

}  // namespace dsdkit::kern
