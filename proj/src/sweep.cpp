#include "twistspec/spectra.hpp"

namespace twistspec::serial
{

std::vector<std::size_t> reidemeister_sweep(std::span<const Morphism> morphisms,
                                            ClassPartition const &classes,
                                            ReidemeisterMethod method)
{
  std::vector<std::size_t> res(morphisms.size());
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    res[i] = reidemeister_number(morphisms[i], classes, method);
  return res;
}

} // namespace twistspec::serial
