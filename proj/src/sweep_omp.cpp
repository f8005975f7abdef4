#include <exception>

#include "twistspec/spectra.hpp"

namespace twistspec::parallel
{

std::vector<std::size_t> reidemeister_sweep(std::span<const Morphism> morphisms,
                                            ClassPartition const &classes,
                                            ReidemeisterMethod method)
{
  auto n = static_cast<long>(morphisms.size());
  std::vector<std::size_t> res(morphisms.size());
  std::vector<std::exception_ptr> errors(morphisms.size());

  #pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      res[i] = reidemeister_number(morphisms[i], classes, method);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  // rethrow the first failure in input order
  for (auto const &err : errors) {
    if (err)
      std::rethrow_exception(err);
  }
  return res;
}

} // namespace twistspec::parallel
