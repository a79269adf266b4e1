#ifndef BETTIC_FIELD_HPP
#define BETTIC_FIELD_HPP

#include <cstdint>
#include <string>

namespace bettic {

// Coefficient field selector: F2, Fp for an odd prime p <= 2^31, or the
// exact rationals.  All homology in this project is over one of these.
class FieldSpec {
  public:
    enum class Tag { F2, Fp, Rationals };

    static FieldSpec f2() { return FieldSpec(Tag::F2, 2); }
    static FieldSpec fp(std::uint32_t p);   // throws std::domain_error if p is not an odd prime <= 2^31
    static FieldSpec rationals() { return FieldSpec(Tag::Rationals, 0); }

    // Parses "f2", "f3", "f101", ..., or "q".
    static FieldSpec parse(const std::string& text);

    Tag tag() const { return tag_; }
    std::uint32_t prime() const { return p_; }
    bool is_f2() const { return tag_ == Tag::F2; }
    bool is_fp() const { return tag_ == Tag::Fp; }
    bool is_rationals() const { return tag_ == Tag::Rationals; }

    std::string name() const;

    bool operator==(const FieldSpec& o) const { return tag_ == o.tag_ && p_ == o.p_; }

  private:
    FieldSpec(Tag t, std::uint32_t p) : tag_(t), p_(p) {}
    Tag tag_;
    std::uint32_t p_;
};

bool is_prime_u64(std::uint64_t n);

} // namespace bettic

#endif
