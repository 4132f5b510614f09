#ifndef PPK_ERRORS_HH
#define PPK_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace ppk
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class ParseError : public Error
    {
        public:
            using Error::Error;
    };

    /// An operation was called outside its documented input domain.
    class PreconditionViolated : public Error
    {
        public:
            using Error::Error;
    };

    /// A hypothesis the construction relies on failed on this input, and no
    /// certified outcome could be produced by the remaining branches.
    class HypothesisViolated : public Error
    {
        public:
            using Error::Error;
    };

    class ParadeTooShort : public Error
    {
        public:
            ParadeTooShort(const std::string & what, long long required) :
                Error(what + " (required length " + std::to_string(required) + ")"),
                required_length(required)
            {
            }

            long long required_length;
    };

    class PatternTooLarge : public Error
    {
        public:
            using Error::Error;
    };

    class TooLarge : public Error
    {
        public:
            using Error::Error;
    };

    class RetriesExhausted : public Error
    {
        public:
            using Error::Error;
    };

    /// Signals an internal inconsistency in a panarboreal certificate. Never a
    /// legitimate outcome.
    class CertificateBroken : public Error
    {
        public:
            using Error::Error;
    };
}

#endif
