#pragma once

/* Error taxonomy for the whole library.
 *
 * Three kinds cover every failure mode the public surfaces expose:
 *   Usage  - the caller broke a precondition (bad conductor, bad level, bad flag);
 *   Parse  - expression or serialization text is malformed, with a byte offset;
 *   Eval   - a mathematically well-posed request cannot be completed (pole hit,
 *            non-invertible series, ambiguous substitution, insufficient precision).
 *
 * The CLI maps these to exit codes 2 (Usage/Parse) and 3 (Eval); a coefficient
 * mismatch during verification is a result, not an error, and exits 1.
 */

#include <stdexcept>
#include <string>

namespace qsf {

enum class ErrorKind { Usage, Parse, Eval };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg, long offset = -1)
        : std::runtime_error(msg), kind_(kind), offset_(offset) {}

    ErrorKind kind() const { return kind_; }

    /* Byte offset into the source text for Parse errors, -1 when not applicable. */
    long offset() const { return offset_; }

private:
    ErrorKind kind_;
    long offset_;
};

[[noreturn]] inline void fail_usage(const std::string& msg) { throw Error(ErrorKind::Usage, msg); }
[[noreturn]] inline void fail_parse(const std::string& msg, long offset) { throw Error(ErrorKind::Parse, msg, offset); }
[[noreturn]] inline void fail_eval(const std::string& msg) { throw Error(ErrorKind::Eval, msg); }

} // namespace qsf
