#include "core/types.hpp"

namespace wscec {

const char* label_name(Label l) {
  switch (l) {
    case Label::Normal: return "Normal";
    case Label::AtrialPremature: return "AtrialPremature";
    case Label::VentricularFlutter: return "VentricularFlutter";
    case Label::FusionVentricularNormal: return "FusionVentricularNormal";
    case Label::PrematureVentricular: return "PrematureVentricular";
    case Label::VentricularAbnormal: return "VentricularAbnormal";
    case Label::LeftBundleBranchBlock: return "LeftBundleBranchBlock";
    case Label::RightBundleBranchBlock: return "RightBundleBranchBlock";
    case Label::BundleBranchBlock: return "BundleBranchBlock";
    case Label::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

const char* true_label_name(TrueLabel l) {
  switch (l) {
    case TrueLabel::N: return "N";
    case TrueLabel::LBBB: return "L.B.B.B.";
    case TrueLabel::RBBB: return "R.B.B.B.";
    case TrueLabel::AP: return "A.P.";
    case TrueLabel::PVC: return "P.V.C.";
    case TrueLabel::FVN: return "F.V.N.";
    case TrueLabel::VF: return "V.F.";
    case TrueLabel::Unlabeled: return "Unlabeled";
  }
  return "Unlabeled";
}

std::optional<TrueLabel> parse_true_label(const std::string& text) {
  // Canonical names plus the MIT-BIH single-character annotation symbols.
  if (text == "N" || text == "Normal") return TrueLabel::N;
  if (text == "L" || text == "L.B.B.B." || text == "LBBB") return TrueLabel::LBBB;
  if (text == "R" || text == "R.B.B.B." || text == "RBBB") return TrueLabel::RBBB;
  if (text == "A" || text == "A.P." || text == "AP") return TrueLabel::AP;
  if (text == "V" || text == "P.V.C." || text == "PVC") return TrueLabel::PVC;
  if (text == "F" || text == "F.V.N." || text == "FVN") return TrueLabel::FVN;
  if (text == "!" || text == "V.F." || text == "VF") return TrueLabel::VF;
  if (text == "Unlabeled") return TrueLabel::Unlabeled;
  return std::nullopt;
}

std::optional<Label> parse_label(const std::string& text) {
  static const Label all[] = {Label::Normal,
                              Label::AtrialPremature,
                              Label::VentricularFlutter,
                              Label::FusionVentricularNormal,
                              Label::PrematureVentricular,
                              Label::VentricularAbnormal,
                              Label::LeftBundleBranchBlock,
                              Label::RightBundleBranchBlock,
                              Label::BundleBranchBlock,
                              Label::Unclassified};
  for (Label l : all)
    if (text == label_name(l)) return l;
  return std::nullopt;
}

int label_group(Label l) {
  switch (l) {
    case Label::Normal: return 0;
    case Label::AtrialPremature: return 1;
    case Label::VentricularFlutter:
    case Label::FusionVentricularNormal:
    case Label::PrematureVentricular:
    case Label::VentricularAbnormal: return 2;
    case Label::LeftBundleBranchBlock:
    case Label::RightBundleBranchBlock:
    case Label::BundleBranchBlock: return 3;
    case Label::Unclassified: return 4;
  }
  return 4;
}

int true_label_group(TrueLabel l) {
  switch (l) {
    case TrueLabel::N: return 0;
    case TrueLabel::AP: return 1;
    case TrueLabel::VF:
    case TrueLabel::FVN:
    case TrueLabel::PVC: return 2;
    case TrueLabel::LBBB:
    case TrueLabel::RBBB: return 3;
    case TrueLabel::Unlabeled: return 4;
  }
  return 4;
}

const char* group_name(int g) {
  switch (g) {
    case 0: return "Normal";
    case 1: return "Atrial";
    case 2: return "Ventricular";
    case 3: return "BundleBranchBlock";
    default: return "Unclassified";
  }
}

}  // namespace wscec
