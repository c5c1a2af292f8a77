#include "catalog.hpp"

namespace grasp::detail {

void register_udag_01(std::vector<UnitModel>& out);
void register_udag_02(std::vector<UnitModel>& out);
void register_udag_03(std::vector<UnitModel>& out);
void register_udag_04(std::vector<UnitModel>& out);
void register_udag_05(std::vector<UnitModel>& out);
void register_udag_06(std::vector<UnitModel>& out);
void register_udag_07(std::vector<UnitModel>& out);
void register_udag_08(std::vector<UnitModel>& out);
void register_udag_09(std::vector<UnitModel>& out);
void register_udag_10(std::vector<UnitModel>& out);
void register_udag_11(std::vector<UnitModel>& out);
void register_udag_12(std::vector<UnitModel>& out);
void register_udag_13(std::vector<UnitModel>& out);
void register_udag_14(std::vector<UnitModel>& out);
void register_udag_15(std::vector<UnitModel>& out);
void register_udag_16(std::vector<UnitModel>& out);
void register_udag_17(std::vector<UnitModel>& out);
void register_udag_18(std::vector<UnitModel>& out);
void register_udag_19(std::vector<UnitModel>& out);
void register_udag_20(std::vector<UnitModel>& out);
void register_udag_21(std::vector<UnitModel>& out);
void register_udag_22(std::vector<UnitModel>& out);
void register_udag_23(std::vector<UnitModel>& out);
void register_udag_24(std::vector<UnitModel>& out);
void register_udag_25(std::vector<UnitModel>& out);
void register_udag_26(std::vector<UnitModel>& out);
void register_udag_27(std::vector<UnitModel>& out);
void register_udag_28(std::vector<UnitModel>& out);
void register_udag_29(std::vector<UnitModel>& out);
void register_udag_30(std::vector<UnitModel>& out);
void register_udag_31(std::vector<UnitModel>& out);
void register_udag_32(std::vector<UnitModel>& out);
void register_udag_33(std::vector<UnitModel>& out);
void register_udag_34(std::vector<UnitModel>& out);
void register_udag_35(std::vector<UnitModel>& out);
void register_udag_36(std::vector<UnitModel>& out);
void register_udag_37(std::vector<UnitModel>& out);
void register_udag_38(std::vector<UnitModel>& out);
void register_udag_39(std::vector<UnitModel>& out);
void register_udag_40(std::vector<UnitModel>& out);
void register_udag_41(std::vector<UnitModel>& out);
void register_udag_42(std::vector<UnitModel>& out);
void register_udag_43(std::vector<UnitModel>& out);
void register_udag_44(std::vector<UnitModel>& out);
void register_udag_45(std::vector<UnitModel>& out);
void register_udag_46(std::vector<UnitModel>& out);
void register_udag_47(std::vector<UnitModel>& out);
void register_udag_48(std::vector<UnitModel>& out);
void register_udag_49(std::vector<UnitModel>& out);
void register_udag_50(std::vector<UnitModel>& out);
void register_udag_51(std::vector<UnitModel>& out);
void register_udag_52(std::vector<UnitModel>& out);
void register_udag_53(std::vector<UnitModel>& out);
void register_udag_54(std::vector<UnitModel>& out);
void register_udag_55(std::vector<UnitModel>& out);
void register_udag_56(std::vector<UnitModel>& out);
void register_udag_57(std::vector<UnitModel>& out);
void register_udag_58(std::vector<UnitModel>& out);
void register_udag_59(std::vector<UnitModel>& out);
void register_udag_60(std::vector<UnitModel>& out);
void register_udag_61(std::vector<UnitModel>& out);

void register_udags(std::vector<UnitModel>& out)
{
    register_udag_01(out);
    register_udag_02(out);
    register_udag_03(out);
    register_udag_04(out);
    register_udag_05(out);
    register_udag_06(out);
    register_udag_07(out);
    register_udag_08(out);
    register_udag_09(out);
    register_udag_10(out);
    register_udag_11(out);
    register_udag_12(out);
    register_udag_13(out);
    register_udag_14(out);
    register_udag_15(out);
    register_udag_16(out);
    register_udag_17(out);
    register_udag_18(out);
    register_udag_19(out);
    register_udag_20(out);
    register_udag_21(out);
    register_udag_22(out);
    register_udag_23(out);
    register_udag_24(out);
    register_udag_25(out);
    register_udag_26(out);
    register_udag_27(out);
    register_udag_28(out);
    register_udag_29(out);
    register_udag_30(out);
    register_udag_31(out);
    register_udag_32(out);
    register_udag_33(out);
    register_udag_34(out);
    register_udag_35(out);
    register_udag_36(out);
    register_udag_37(out);
    register_udag_38(out);
    register_udag_39(out);
    register_udag_40(out);
    register_udag_41(out);
    register_udag_42(out);
    register_udag_43(out);
    register_udag_44(out);
    register_udag_45(out);
    register_udag_46(out);
    register_udag_47(out);
    register_udag_48(out);
    register_udag_49(out);
    register_udag_50(out);
    register_udag_51(out);
    register_udag_52(out);
    register_udag_53(out);
    register_udag_54(out);
    register_udag_55(out);
    register_udag_56(out);
    register_udag_57(out);
    register_udag_58(out);
    register_udag_59(out);
    register_udag_60(out);
    register_udag_61(out);
}

} // namespace grasp::detail
