#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactcat/ses.hpp"

namespace exactcat {

/// A class of short exact sequences over a fixed ambient (quiver, field),
/// given by a membership predicate.  Values are cheap shareable handles.
///
/// Construction does not prove the class is an exact structure; run
/// check_axioms (axiom_check.hpp) against a corpus for evidence, or use the
/// audited custom_structure overload for the construction-time split check.
class ExactStructure {
public:
    enum class Kind { all, split, custom };

    ExactStructure(std::string name, Kind kind, Quiver quiver, PrimeField field,
                   std::function<bool(const ShortExactSequence&)> member)
        : impl_(std::make_shared<const Impl>(Impl{std::move(name), kind, std::move(quiver),
                                                  field, std::move(member)})) {}

    const std::string& name() const { return impl_->name; }
    Kind kind() const { return impl_->kind; }
    const Quiver& quiver() const { return impl_->quiver; }
    const PrimeField& field() const { return impl_->field; }

    bool same_ambient(const Representation& x) const {
        return x.quiver() == impl_->quiver && x.field() == impl_->field;
    }

    /// Membership of a (validated) kernel-cokernel pair in this class.
    bool member(const ShortExactSequence& seq) const {
        if (!same_ambient(seq.middle()))
            throw invalid_input("ExactStructure: sequence over a different ambient");
        return impl_->member(seq);
    }

private:
    struct Impl {
        std::string name;
        Kind kind;
        Quiver quiver;
        PrimeField field;
        std::function<bool(const ShortExactSequence&)> member;
    };
    std::shared_ptr<const Impl> impl_;
};

/// The maximal structure: every kernel-cokernel pair is admissible.
inline ExactStructure e_all(const Quiver& q, const PrimeField& f) {
    return ExactStructure("all", ExactStructure::Kind::all, q, f,
                          [](const ShortExactSequence&) { return true; });
}

/// The minimal structure: exactly the split sequences.
inline ExactStructure e_split(const Quiver& q, const PrimeField& f) {
    return ExactStructure("split", ExactStructure::Kind::split, q, f,
                          [](const ShortExactSequence& s) { return sequence_splits(s); });
}

/// Custom predicate class, constructed permissively (no audit); feed it to
/// check_axioms to learn what it violates.
inline ExactStructure custom_structure(const Quiver& q, const PrimeField& f, std::string name,
                                       std::function<bool(const ShortExactSequence&)> pred) {
    return ExactStructure(std::move(name), ExactStructure::Kind::custom, q, f, std::move(pred));
}

/// Audited custom predicate: rejects construction (invalid_structure) if the
/// predicate refuses any split sequence built from pairs of corpus objects.
/// Every exact structure must contain the split sequences, so such a
/// predicate cannot define one.
inline ExactStructure custom_structure(const Quiver& q, const PrimeField& f, std::string name,
                                       std::function<bool(const ShortExactSequence&)> pred,
                                       const std::vector<Representation>& audit_corpus) {
    ExactStructure e = custom_structure(q, f, name, std::move(pred));
    for (const Representation& x : audit_corpus)
        for (const Representation& y : audit_corpus) {
            DirectSum ds = direct_sum(x, y);
            ShortExactSequence split_seq(ds.in_first, ds.pr_second);
            if (!e.member(split_seq))
                throw invalid_structure("custom_structure '" + e.name() +
                                        "': predicate rejects a split sequence (dims " +
                                        std::to_string(x.total_dim()) + " (+) " +
                                        std::to_string(y.total_dim()) + ")");
        }
    return e;
}

/// f is an admissible monic (inflation): vertexwise injective and its
/// canonical kernel-cokernel pair lies in E.
inline bool is_admissible_monic(const RepMorphism& f, const ExactStructure& e) {
    if (!f.vertexwise_injective()) return false;
    return e.member(sequence_of_monic(f));
}

/// f is an admissible epic (deflation): vertexwise surjective and its
/// canonical kernel-cokernel pair lies in E.
inline bool is_admissible_epic(const RepMorphism& f, const ExactStructure& e) {
    if (!f.vertexwise_surjective()) return false;
    return e.member(sequence_of_epic(f));
}

struct AdmissibleFactorization {
    RepMorphism epic;   // admissible epic onto the image
    RepMorphism monic;  // admissible monic into the target
};

/// Epi-mono factorization f = monic * epic through the canonical image, kept
/// only when both halves are admissible for E.
inline std::optional<AdmissibleFactorization> admissible_factorization(const RepMorphism& f,
                                                                       const ExactStructure& e) {
    ImageFactorization im = image_factorization(f);
    if (!is_admissible_epic(im.epic, e)) return std::nullopt;
    if (!is_admissible_monic(im.monic, e)) return std::nullopt;
    return AdmissibleFactorization{std::move(im.epic), std::move(im.monic)};
}

/// The redundant-axiom implication for one composable pair (i, j): if j*i is
/// an admissible monic (and i has a cokernel, automatic here), then i is an
/// admissible monic.  Returns true when the implication holds (including
/// vacuously).
inline bool obscure_axiom_holds(const RepMorphism& i, const RepMorphism& j,
                                const ExactStructure& e) {
    if (i.target() != j.source()) throw invalid_input("obscure_axiom_holds: not composable");
    if (!is_admissible_monic(compose(j, i), e)) return true;
    return is_admissible_monic(i, e);
}

}  // namespace exactcat
