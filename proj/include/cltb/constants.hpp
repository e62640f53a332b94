#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cltb {

enum class Regime { iid, general };
const char* regime_name(Regime r);

// One row of a published table.  Numbers stay as strings so they can be
// compared digit for digit with the printed source.
struct ConstantEntry {
  std::string kind, table, regime, delta, role, s, value, p, gamma, source;

  double number() const;
  double s_number() const;
};

struct SConstant {
  double s;
  double c;
};

class ConstantTable {
 public:
  // Parses the JSON document and checks its checksum; throws on mismatch.
  static ConstantTable parse(const std::string& json_text);
  static const ConstantTable& builtin();

  const std::string& version() const { return version_; }
  const std::string& checksum() const { return checksum_; }
  const std::vector<ConstantEntry>& entries() const { return entries_; }

  std::vector<const ConstantEntry*> select(const std::string& kind, const std::string& table = "") const;

  // Upper bound on C_0(delta).  The "1minus" row is never matched by a numeric delta.
  double c0(double delta, Regime r) const;
  // Tabulated (s, C_s(delta)) pairs for s >= 0, including s = 0.
  std::vector<SConstant> structured(double delta, Regime r) const;
  double cs(double delta, double s, Regime r) const;
  double cs_lower(double delta) const;
  // Tabulated (s, K_s(delta)) pairs for the non-uniform bound.
  std::vector<SConstant> nonuniform(double delta, Regime r) const;
  double bikelis_constant(Regime r, bool far) const;
  // min over tabulated s in [0,1] of the iid C_s(delta)
  double m(double delta) const;

 private:
  std::string version_, checksum_;
  std::vector<ConstantEntry> entries_;
};

// Table used by the bound functions; the CLI may swap it for a file.
const ConstantTable& active_constants();
void set_active_constants(const ConstantTable& t);

std::string crc32_hex(const std::string& data);

}  // namespace cltb
