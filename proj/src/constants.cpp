#include "cltb/constants.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <cstdio>
#include <memory>
#include <boost/crc.hpp>
#include <json.hpp>

#include "cltb/errors.hpp"

namespace cltb {

namespace detail {
extern const char* const kBuiltinConstants;
}

namespace {

bool numeric_key(const std::string& key, double& out) {
  if (key.empty() || key.find_first_not_of("0123456789.") != std::string::npos) return false;
  out = std::stod(key);
  return true;
}

bool delta_matches(const std::string& key, double delta) {
  double v;
  return numeric_key(key, v) && std::fabs(v - delta) <= 1e-12;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::unique_ptr<ConstantTable>& active_slot() {
  static std::unique_ptr<ConstantTable> slot;
  return slot;
}

}  // namespace

const char* regime_name(Regime r) { return r == Regime::iid ? "iid" : "general"; }

double ConstantEntry::number() const { return std::stod(value); }
double ConstantEntry::s_number() const { return s.empty() ? 0.0 : std::stod(s); }

std::string crc32_hex(const std::string& data) {
  boost::crc_32_type crc;
  crc.process_bytes(data.data(), data.size());
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", unsigned(crc.checksum()));
  return std::string("crc32:") + buf;
}

ConstantTable ConstantTable::parse(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("constant table: ") + e.what());
  }
  ConstantTable t;
  t.version_ = doc.value("version", "");
  t.checksum_ = doc.value("checksum", "");
  const auto& entries = doc.at("entries");
  const std::string actual = crc32_hex(entries.dump());
  if (actual != t.checksum_)
    throw StructuralError("constant table checksum mismatch: stored " + t.checksum_ + ", computed " + actual);
  for (const auto& e : entries) {
    ConstantEntry c;
    c.kind = e.value("kind", "");
    c.table = e.value("table", "");
    c.regime = e.value("regime", "");
    c.delta = e.value("delta", "");
    c.role = e.value("role", "");
    c.s = e.value("s", "");
    c.value = e.value("value", "");
    c.p = e.value("p", "");
    c.gamma = e.value("gamma", "");
    c.source = e.value("source", "");
    t.entries_.push_back(std::move(c));
  }
  return t;
}

const ConstantTable& ConstantTable::builtin() {
  static const ConstantTable t = parse(detail::kBuiltinConstants);
  return t;
}

std::vector<const ConstantEntry*> ConstantTable::select(const std::string& kind, const std::string& table) const {
  std::vector<const ConstantEntry*> out;
  for (const auto& e : entries_)
    if (e.kind == kind && (table.empty() || e.table == table)) out.push_back(&e);
  return out;
}

double ConstantTable::c0(double delta, Regime r) const {
  for (const auto* e : select("C0"))
    if (e->regime == regime_name(r) && delta_matches(e->delta, delta)) return e->number();
  throw LookupError("no C_0 constant for delta=" + fmt(delta));
}

std::vector<SConstant> ConstantTable::structured(double delta, Regime r) const {
  std::vector<SConstant> out{{0.0, c0(delta, r)}};
  for (const auto* e : select("Cs"))
    if (e->regime == regime_name(r) && delta_matches(e->delta, delta)) out.push_back({e->s_number(), e->number()});
  std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.s < b.s; });
  out.erase(std::unique(out.begin(), out.end(), [](auto a, auto b) { return a.s == b.s; }), out.end());
  return out;
}

double ConstantTable::cs(double delta, double s, Regime r) const {
  for (const auto& sc : structured(delta, r))
    if (std::fabs(sc.s - s) <= 1e-12) return sc.c;
  throw LookupError("no C_s constant for delta=" + fmt(delta) + ", s=" + fmt(s) + ", " + regime_name(r));
}

double ConstantTable::cs_lower(double delta) const {
  for (const auto* e : select("Cs_lower"))
    if (delta_matches(e->delta, delta)) return e->number();
  throw LookupError("no lower bound on C_s for delta=" + fmt(delta));
}

std::vector<SConstant> ConstantTable::nonuniform(double delta, Regime r) const {
  std::vector<SConstant> out;
  for (const auto* e : select("K"))
    if (e->regime == regime_name(r) && delta_matches(e->delta, delta)) out.push_back({e->s_number(), e->number()});
  if (out.empty()) throw LookupError("no K_s constant for delta=" + fmt(delta));
  std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.s < b.s; });
  return out;
}

double ConstantTable::bikelis_constant(Regime r, bool far) const {
  for (const auto* e : select(far ? "A_nonuniform_far" : "A_nonuniform"))
    if (e->regime == regime_name(r)) return e->number();
  throw LookupError("no non-uniform constant A");
}

double ConstantTable::m(double delta) const {
  for (const auto* e : select("M"))
    if (delta_matches(e->delta, delta)) return e->number();
  throw LookupError("no M constant for delta=" + fmt(delta));
}

const ConstantTable& active_constants() {
  const auto& slot = active_slot();
  return slot ? *slot : ConstantTable::builtin();
}

void set_active_constants(const ConstantTable& t) { active_slot() = std::make_unique<ConstantTable>(t); }

}  // namespace cltb
