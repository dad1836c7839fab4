// Generated by make_reference_digits.py -- do not edit by hand.
//
// Each entry is round(value * 10^digits) rendered in decimal; see the
// generator script for the definition of every value.
#pragma once

namespace reference_digits {

struct Entry {
    const char* name;
    int digits;
    const char* mantissa;
};

inline constexpr Entry pi_10{"pi_10", 10, "31415926536"};
inline constexpr Entry e_10{"e_10", 10, "27182818285"};
inline constexpr Entry ln2_10{"ln2_10", 10, "6931471806"};
inline constexpr Entry sin1_10{"sin1_10", 10, "8414709848"};
inline constexpr Entry cos_3_5_10{"cos_3_5_10", 10, "8253356149"};
inline constexpr Entry pi_100{"pi_100", 100, "31415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170680"};
inline constexpr Entry e_100{"e_100", 100, "27182818284590452353602874713526624977572470936999595749669676277240766303535475945713821785251664274"};
inline constexpr Entry ln2_100{"ln2_100", 100, "6931471805599453094172321214581765680755001343602552541206800094933936219696947156058633269964186875"};
inline constexpr Entry sqrt2_100{"sqrt2_100", 100, "14142135623730950488016887242096980785696718753769480731766797379907324784621070388503875343276415727"};
inline constexpr Entry sin1_100{"sin1_100", 100, "8414709848078965066525023216302989996225630607983710656727517099919104043912396689486397435430526959"};
inline constexpr Entry atan_third_100{"atan_third_100", 100, "3217505543966421934014046143586613190207552955576561914328030593567562374058105443564084223506413744"};
inline constexpr Entry cos_3_5_100{"cos_3_5_100", 100, "8253356149096782972409524989553760388780910391884703813697497736715692818135230634040026542780984460"};
inline constexpr Entry cos_3_5_1000{"cos_3_5_1000", 1000, "8253356149096782972409524989553760388780910391884703813697497736715692818135230634040026542780984460467060994582460722497366893783331251612684991129706852802279443124159179854049794925355167314510919310793066441735013761038471896320032372603214739370785539997964130682028865801557647539572289089877649907821245237899915121355350681389291901860996062158593397378179431220959367958189726152467091951625197615221558718087172060988418525665204046583949488206558568025905058626272468556589449719422039713849704715463957464435206705439026096164859532327292219103167520428660535899752883748736481866337034298975503664553258207698991260759227914901464654097776046532177914219116851935122184139837567485488957530757723149319473202812793477564233885915920687420345180775622966913047468953509730951835489864417972363672043581190480770752334882177126413500076314023734014995734855377801946129188390483655995230694581363844416391417538381644922581789285381011735273588770756470362039005667742189352573564372215167"};
inline constexpr Entry cos_fib_2394_2395_1000{"cos_fib_2394_2395_1000", 1000, "8150192046878788409863630303889371341001995793915574513279892003950007149852226792759349275923650234815376178406202135069424242792167085922093604066403692055829715693939975644738924659261344930783679038321874750754088400644325774855456834148470698081916606717767170616315930711018583737912803467967658671976055907016877175437282372389597800994067698061135038507087964057211154694942292310783888999036743964016476815234120454135734501055417665998290588949592643881595420953426439150243339224696419343448067288136980605400391428459066144176312595013683060771617598470263485969248070378917181731150233822716946651457129015156625880739531466828470715607388918784298801652664325935645163171976437533287194541888657611544079750870457634783756693502866231998303569859276886381769749742306509306576775038003153875076557490050519541743442769630342507144304214666921039220151233732398984453679699657607028708800431514339204130688621530668931875773314564353524714933509949077188544752645124045308149524237109272"};
inline constexpr Entry third_5{"third_5", 5, "33333"};
inline constexpr Entry pi_50{"pi_50", 50, "314159265358979323846264338327950288419716939937511"};
inline constexpr Entry e_40{"e_40", 40, "27182818284590452353602874713526624977572"};
inline constexpr Entry sqrt2_30{"sqrt2_30", 30, "1414213562373095048801688724210"};
inline constexpr Entry sin_pi_6_30{"sin_pi_6_30", 30, "500000000000000000000000000000"};
inline constexpr Entry cos_3_5_60{"cos_3_5_60", 60, "825335614909678297240952498955376038878091039188470381369750"};
inline constexpr Entry ln2_50{"ln2_50", 50, "69314718055994530941723212145817656807550013436026"};
inline constexpr Entry atan_third_40{"atan_third_40", 40, "3217505543966421934014046143586613190208"};
inline constexpr Entry tan1_30{"tan1_30", 30, "1557407724654902230506974807458"};
inline constexpr Entry tanh_half_30{"tanh_half_30", 30, "462117157260009758502318483644"};
inline constexpr Entry asin_half_30{"asin_half_30", 30, "523598775598298873077107230547"};
inline constexpr Entry acos_zero_30{"acos_zero_30", 30, "1570796326794896619231321691640"};
inline constexpr Entry asinh1_30{"asinh1_30", 30, "881373587019543025232609324980"};
inline constexpr Entry acosh2_30{"acosh2_30", 30, "1316957896924816708625046347308"};
inline constexpr Entry atanh_third_30{"atanh_third_30", 30, "346573590279972654708616060729"};
inline constexpr Entry exp_ln2_25{"exp_ln2_25", 25, "20000000000000000000000000"};
inline constexpr Entry sinh1_plus_cosh1_30{"sinh1_plus_cosh1_30", 30, "2718281828459045235360287471353"};
inline constexpr Entry three_pow_half_30{"three_pow_half_30", 30, "1732050807568877293527446341506"};
inline constexpr Entry expr_mix_8{"expr_mix_8", 8, "1225000000"};
inline constexpr Entry sqrt2_sq_30{"sqrt2_sq_30", 30, "2000000000000000000000000000000"};

}  // namespace reference_digits
