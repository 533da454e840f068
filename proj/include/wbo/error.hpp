#ifndef WBO_ERROR_HPP
#define WBO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wbo {

enum class ErrorKind {
  Parse,
  UnknownVertex,
  UnknownEdge,
  EqualEndpoints,
  NonContractible,
  NonContractibleSet,
  NotASubgraph,
  ProvenanceOverflow,
  InconsistentProvenance,
  OrientationMismatch,
  BaseMismatch,
  PartMismatch,
  FragmentMismatch,
  HypothesisViolated,
  SearchExhausted,
  NotConnected,
  NotAPath,
  NotEfficient,
  InconsistentClasses,
  Precondition,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace wbo

#endif
