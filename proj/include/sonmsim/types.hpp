#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sonmsim/errors.hpp"

namespace sonmsim {

using Tick = std::uint64_t;

// 64-bit content digest. The simulation models hashes, not cryptography;
// what matters is determinism and collision-freeness at simulation scale.
using Digest = std::uint64_t;

std::string digest_hex(Digest d);

// 20-byte account/contract identifier rendered as 0x-prefixed lowercase hex.
struct Address {
  std::array<std::uint8_t, 20> bytes{};

  auto operator<=>(const Address&) const = default;

  bool is_zero() const;
  std::string hex() const;

  // Deterministic address construction: one tag byte per agent class,
  // index in the trailing eight bytes.
  static Address make(std::uint8_t tag, std::uint64_t index);
};

// Indivisible token units. Arithmetic is checked; negative amounts are
// unrepresentable by construction.
struct TokenAmount {
  std::uint64_t units{0};

  auto operator<=>(const TokenAmount&) const = default;

  TokenAmount add(TokenAmount other) const;
  TokenAmount sub(TokenAmount other) const;  // throws on underflow
  TokenAmount mul(std::uint64_t k) const;
  bool is_zero() const { return units == 0; }
};

struct TaskId {
  std::uint64_t value{0};
  auto operator<=>(const TaskId&) const = default;
};

struct SubtaskId {
  TaskId task;
  std::uint32_t index{0};
  auto operator<=>(const SubtaskId&) const = default;
};

enum class TrustStatus { Unconfirmed, Checked, Safe };

const char* to_string(TrustStatus s);

// Registry entry for one hub: who runs it, where its wallet lives, how to
// reach it.
struct HubRecord {
  Address owner;
  Address wallet;
  std::string ip;
  std::string name;

  bool operator==(const HubRecord&) const = default;
};

struct AppEntry {
  std::string app_id;
  Address hub_owner;
  TokenAmount price_per_unit;
};

// Content-addressed file handle used for large input/output delivery.
// Content itself is synthetic: a seed digest from which piece hashes derive.
struct TorrentDescriptor {
  Digest info_hash{0};
  std::uint64_t total_size{0};
  std::uint64_t piece_size{0};
  std::vector<Digest> piece_hashes;
  std::vector<Address> seeders;
  Digest content{0};
};

// A buyer task as offered to a hub.
struct TaskSpec {
  TaskId id;
  Address buyer;
  std::string app;
  std::uint64_t input_size{0};
  Digest content{0};
  bool torrent_delivery{false};
  std::uint32_t work_units{0};
  TokenAmount reward;
};

struct Subtask {
  SubtaskId id;
  std::string capability;
  std::uint32_t work_units{0};
  std::uint64_t input_slice{0};  // bytes of the parent input covered
  Digest content{0};
};

struct HardwareProfile {
  std::set<std::string> capabilities;
  std::map<std::string, std::uint32_t> throughput;  // work units per tick

  bool capable(const std::string& cap) const {
    return capabilities.count(cap) > 0;
  }
  std::uint32_t throughput_for(const std::string& cap) const {
    auto it = throughput.find(cap);
    return it == throughput.end() ? 0 : it->second;
  }
};

}  // namespace sonmsim
