#ifndef TWISTSPEC_SPECTRA_HPP
#define TWISTSPEC_SPECTRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twistspec/search.hpp"
#include "twistspec/twisted.hpp"

namespace twistspec
{

/// Reidemeister numbers over a set of morphisms, kept with multiplicities.
struct Spectrum
{
  std::map<std::size_t, std::size_t> multiplicities;

  std::vector<std::size_t> values() const;
  bool contains(std::size_t r) const { return multiplicities.count(r) != 0; }
  std::size_t count(std::size_t r) const;
  std::size_t total() const;

  bool operator==(Spectrum const &) const = default;
};

namespace serial
{

std::vector<std::size_t> reidemeister_sweep(std::span<const Morphism> morphisms,
                                            ClassPartition const &classes,
                                            ReidemeisterMethod method);

} // namespace serial

namespace parallel
{

std::vector<std::size_t> reidemeister_sweep(std::span<const Morphism> morphisms,
                                            ClassPartition const &classes,
                                            ReidemeisterMethod method);

} // namespace parallel

struct SpectrumOptions
{
  Budget budget;
  ReidemeisterMethod method = ReidemeisterMethod::fixed_classes;
  Execution execution = Execution::parallel;
  bool extended = true;  ///< also sweep endomorphisms
  bool battery = true;   ///< run the theorem battery in classify
};

Spectrum spectrum_of(std::span<const Morphism> morphisms,
                     ClassPartition const &classes,
                     ReidemeisterMethod method,
                     Execution exec = Execution::parallel);

Spectrum spectrum(GroupPtr const &group, SpectrumOptions const &options = {});
Spectrum extended_spectrum(GroupPtr const &group, SpectrumOptions const &options = {});

struct CheckResult
{
  CheckResult() = default;
  explicit CheckResult(std::string name_) : name(std::move(name_)) {}

  std::string name;
  bool passed = true;
  bool skipped = false;  ///< needed data exceeded the budget
  std::string witness;   ///< generator images of a failing morphism, if any
};

struct GroupFlags
{
  bool trivial_spectrum = false;
  std::optional<bool> trivial_extended_spectrum;  ///< unset when skipped
  std::optional<bool> full_extended_spectrum;
  bool abelian = false;
  bool nilpotent = false;
  bool perfect = false;
  bool simple = false;
  bool quasisimple = false;
  bool odd_order = false;
};

struct SpectrumReport
{
  std::string name;
  std::size_t order = 0;
  std::size_t class_number = 0;
  std::vector<std::size_t> class_sizes;
  std::size_t center_order = 0;

  Spectrum spectrum;
  std::size_t aut_count = 0;
  std::size_t class_preserving_aut_count = 0;
  std::size_t out_order = 0;

  std::optional<Spectrum> extended_spectrum;
  std::optional<std::size_t> end_count;
  std::optional<std::size_t> fixed_point_free_end_count;
  std::string extended_skipped;  ///< reason, empty unless skipped

  GroupFlags flags;
  std::optional<std::vector<CheckResult>> theorem_battery;

  bool battery_passed() const;
};

/// Computes spectra, structural flags and (optionally) the theorem battery.
/// The automorphism sweep must fit the budget; the endomorphism sweep is
/// marked skipped when it does not.
SpectrumReport classify(GroupPtr const &group, std::string name,
                        SpectrumOptions const &options = {});

/// Runs every applicable check with the checked Reidemeister method.
std::vector<CheckResult> theorem_battery(GroupPtr const &group,
                                         SpectrumOptions const &options = {});

std::string describe_images(Morphism const &phi);

} // namespace twistspec

#endif // TWISTSPEC_SPECTRA_HPP
