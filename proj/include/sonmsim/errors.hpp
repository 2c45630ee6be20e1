#pragma once

#include <stdexcept>
#include <string>

namespace sonmsim {

enum class Err {
  InsufficientFunds,
  InvalidAmount,
  UnknownWallet,
  OwnerMismatch,
  NotAuthority,
  NotRegistered,
  NotOwner,
  UnknownHub,
  DuplicateEscrow,
  NotDepositor,
  EscrowNotOpen,
  UnknownChannel,
  UnknownRecipient,
  CapabilityMissing,
  UnsupportedApp,
  UnknownSubtask,
  UnknownTask,
  IncompleteTask,
  UnknownDescriptor,
  InvalidDescriptor,
  InvalidSize,
  HashMismatch,
  NoSeeders,
  ParseError,
  ValidationError,
  Overflow,
};

const char* to_string(Err e);

class SimError : public std::runtime_error {
 public:
  SimError(Err code, std::string detail);
  Err code() const { return code_; }

 private:
  Err code_;
};

}  // namespace sonmsim
