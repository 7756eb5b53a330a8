#include "specht/cohomology.hpp"

namespace specht {

namespace {

bool is_f_map(const std::string& id) {
  return id.size() >= 2 && id.size() <= 3 && id[0] == 'f' && id.find_first_not_of("012", 1) == std::string::npos &&
         (id.size() == 2 || id[1] < id[2]);
}

}  // namespace

QuotientSpec QuotientSpec::make(int n, RingSpec ring, const std::string& map_id) {
  if (n < 3) throw SizeMismatch("quotients are defined for n >= 3");
  QuotientSpec q;
  q.n = n;
  q.ring = ring;
  if (map_id.rfind("pi:", 0) == 0) {
    long m = 0;
    try {
      m = std::stol(map_id.substr(3));
    } catch (const std::exception&) {
      throw DomainMismatch("pi:m needs an integer modulus, got '" + map_id + "'");
    }
    if (m < 2) throw DomainMismatch("pi:m needs m >= 2");
    if (!ring.is_z() && ring.m != m) throw DomainMismatch("pi:" + std::to_string(m) + " conflicts with ring " + ring.to_string());
    q.ring = RingSpec::Zmod(m);
    q.map_id = "pi_m";
    return q;
  }
  if (map_id == "pi_m" || map_id == "pi") {
    if (ring.is_z() || ring.m < 2) throw DomainMismatch("pi_m needs the ring Z/m");
    q.map_id = "pi_m";
    return q;
  }
  if (!is_f_map(map_id)) throw IndexError("unknown quotient map '" + map_id + "'");
  q.map_id = map_id;
  return q;
}

std::string QuotientSpec::to_string() const {
  return (map_id == "pi_m" ? "pi:" + std::to_string(ring.m) : map_id + " over " + ring.to_string()) + ", n = " +
         std::to_string(n);
}

ModulePtr extension_kernel(const QuotientSpec& q) {
  if (q.map_id == "pi_m") return make_module("M2", q.n, q.ring);
  return make_module("IM_F" + q.map_id.substr(1), q.n, q.ring);
}

const IntMatrix& extension_projection(const QuotientSpec& q) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, IntMatrix> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(q.n, q.map_id);
  auto it = memo.find(key);
  if (it == memo.end()) {
    IntMatrix h = q.map_id == "pi_m" ? IntMatrix::identity(pair_count(q.n)) : f_stack_matrix(q.map_id.substr(1), q.n);
    it = memo.emplace(key, std::move(h)).first;
  }
  return it->second;
}

SplittingResult splitting_check(const QuotientSpec& q) {
  Cochain alpha = named_cocycle("hat_alpha2", Int(1), q.n, RingSpec::Z());
  ModulePtr target = extension_kernel(q);
  SplittingResult out{false, q.map_id == "pi_m" ? pushforward("reduce", alpha, target)
                                                : pushforward(q.map_id, alpha, target),
                      std::nullopt, nullptr};
  CoboundaryResult c = is_coboundary(out.structure_class);
  out.splits = c.witness.has_value();
  out.witness = std::move(c.witness);
  out.certificate = std::move(c.certificate);
  return out;
}

nlohmann::json SplittingResult::to_json() const {
  return {{"splits", splits},
          {"witness", witness ? witness->to_json() : nlohmann::json(nullptr)},
          {"certificate", certificate}};
}

}  // namespace specht
