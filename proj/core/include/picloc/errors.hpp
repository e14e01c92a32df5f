#ifndef PICLOC_ERRORS_HPP
#define PICLOC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace picloc {

/**
 * Base class for every error that describes a mathematical property of the
 * input (torsion, non-faces, incoherent data, ...). The command-line tool maps
 * these to exit status 1.
 */
class DomainError : public std::runtime_error
{
    public:
        DomainError(std::string kind, const std::string& what)
            : std::runtime_error(kind + ": " + what), kind_(std::move(kind))
        {
        }

        const std::string& kind() const noexcept { return kind_; }

    private:
        std::string kind_;
};

/**
 * Malformed input text (facet files, presentations, ideal files). Exit status 2.
 */
class ParseError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

#define PICLOC_DOMAIN_ERROR(Name)                                          \
    class Name : public DomainError                                        \
    {                                                                      \
        public:                                                            \
            explicit Name(const std::string& what) : DomainError(#Name, what) {} \
    }

// abelian
PICLOC_DOMAIN_ERROR(CompositionNonzero);
PICLOC_DOMAIN_ERROR(UnsupportedModel);
PICLOC_DOMAIN_ERROR(NotInLattice);

// simplicial
PICLOC_DOMAIN_ERROR(UnknownVertex);
PICLOC_DOMAIN_ERROR(UncoveredVertex);
PICLOC_DOMAIN_ERROR(NotAFace);
PICLOC_DOMAIN_ERROR(VoidComplex);

// binoid
PICLOC_DOMAIN_ERROR(TorsionDetected);
PICLOC_DOMAIN_ERROR(NonIntegral);
PICLOC_DOMAIN_ERROR(NonCancellative);
PICLOC_DOMAIN_ERROR(UnsupportedPresentation);

// cech
PICLOC_DOMAIN_ERROR(RestrictionIncoherent);

// picard
PICLOC_DOMAIN_ERROR(CrossCheckMismatch);
PICLOC_DOMAIN_ERROR(NotAGraph);
PICLOC_DOMAIN_ERROR(Disconnected);

// monomial
PICLOC_DOMAIN_ERROR(CharPUnsupported);

#undef PICLOC_DOMAIN_ERROR

}   // namespace picloc

#endif
