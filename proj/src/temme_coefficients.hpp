// Generated by scripts/gen_temme_coefficients.py; do not edit.
#pragma once

#include <array>

namespace epstein::detail {

inline constexpr std::array<double, 60> kTemmeC0 = {
    -3.3333333333333333333e-1,
    8.3333333333333333333e-2,
    -1.4814814814814814815e-2,
    1.1574074074074074074e-3,
    3.5273368606701940035e-4,
    -1.787551440329218107e-4,
    3.9192631785224377817e-5,
    -2.1854485106799921615e-6,
    -1.8540622107151599607e-6,
    8.296711340953086005e-7,
    -1.7665952736826079304e-7,
    6.7078535434014985804e-9,
    1.0261809784240308043e-8,
    -4.3820360184533531866e-9,
    9.1476995822367902342e-10,
    -2.5514193994946249767e-11,
    -5.8307721325504250675e-11,
    2.4361948020667416244e-11,
    -5.0276692801141755891e-12,
    1.1004392031956134771e-13,
    3.3717632624009853788e-13,
    -1.3923887224181620659e-13,
    2.8534893807047443204e-14,
    -5.139111834242572619e-16,
    -1.9752288294349442835e-15,
    8.0995211567045613341e-16,
    -1.6522531216398161819e-16,
    2.5305430097478884233e-18,
    1.1686939738559576589e-17,
    -4.7700370498204847582e-18,
    9.6991260590562371242e-19,
    -1.293256553803817501e-20,
    -6.9692302531856933805e-20,
    2.8351454321769365999e-20,
    -5.7509821590070475002e-21,
    6.7929537834889145646e-23,
    4.1821254261113358578e-22,
    -1.6971539620047603732e-22,
    3.436215938394319883e-23,
    -3.643995779628021012e-25,
    -2.5225356635784337759e-24,
    1.0217275578876768253e-24,
    -2.0656189282895155962e-25,
    1.9877282123870351328e-27,
    1.5280113092999194236e-26,
    -6.179660368053257854e-27,
    1.2478240525293549354e-27,
    -1.0991290143450208263e-29,
    -9.2890740583134141875e-29,
    3.752073182891738357e-29,
    -7.5687044375964856412e-30,
    6.1468699303077088333e-32,
    5.6642895386536999422e-31,
    -2.285574170588100483e-31,
    4.6065357066959287863e-32,
    -3.4706467746804905918e-34,
    -3.4630814188437862931e-33,
    1.3961523055088327602e-33,
    -2.8118597375612607825e-34,
    1.9757021514159378712e-36};

inline constexpr std::array<double, 58> kTemmeC1 = {
    -1.8518518518518518519e-3,
    -3.4722222222222222222e-3,
    2.6455026455026455026e-3,
    -9.9022633744855967078e-4,
    2.0576131687242798354e-4,
    -4.0187757201646090535e-7,
    -1.8098550334489977837e-5,
    7.6491609160811100846e-6,
    -1.6120900894563446004e-6,
    4.6471278028074343423e-9,
    1.3786334469157209593e-7,
    -5.752545603517704964e-8,
    1.1951628599778147324e-8,
    -1.7543241719747647624e-11,
    -1.0091543710600412627e-9,
    4.1627929918425826362e-10,
    -8.5639070264929806381e-11,
    6.0672151016047586151e-14,
    7.1624989648114853901e-12,
    -2.9331866437714371174e-12,
    5.9966963656836887233e-13,
    -2.1671786527323314102e-16,
    -4.9783399723692616405e-14,
    2.0291628823713424774e-14,
    -4.1312557138106100494e-15,
    8.2865162398830964438e-19,
    3.4100308869333327934e-16,
    -1.3854195302893971536e-16,
    2.8123466532288746657e-17,
    -3.4064441941430288053e-21,
    -2.3109797315115571911e-18,
    9.3667570641322559256e-19,
    -1.8972570152858487052e-19,
    1.4912630740339597679e-23,
    1.553490004725139638e-20,
    -6.2851304542371874764e-21,
    1.27091101137224709e-21,
    -6.8633857176278836518e-26,
    -1.037649398251326176e-22,
    4.1921196504891650012e-23,
    -8.4653881935177626892e-24,
    3.2834997533610860189e-28,
    6.8953846716104384302e-25,
    -2.7825036058009552302e-25,
    5.6126563658600394173e-26,
    -1.6189394043883005297e-30,
    -4.562740885701218388e-27,
    1.8394318004622393123e-27,
    -3.7069432683122977024e-28,
    8.1760120471495408536e-33,
    3.0085030970798946836e-29,
    -1.2118665495725522317e-29,
    2.4403268687936873784e-30,
    -4.2105839175194230009e-35,
    -1.9777133921083197307e-31,
    7.9609603470459138087e-32,
    -1.6020196359618330347e-32,
    2.2040147447093771873e-37};

inline constexpr std::array<double, 56> kTemmeC2 = {
    4.1335978835978835979e-3,
    -2.6813271604938271605e-3,
    7.7160493827160493827e-4,
    2.0093878600823045267e-6,
    -1.0736653226365160522e-4,
    5.2923448829120125416e-5,
    -1.2760635188618727713e-5,
    3.4235787340961380742e-8,
    1.3721957309062933206e-6,
    -6.2989921383800550229e-7,
    1.4280614206064241792e-7,
    -2.0477098421990866015e-10,
    -1.4092529910867521053e-8,
    6.2289740849220220336e-9,
    -1.3670488396617113499e-9,
    9.4283561590146781955e-13,
    1.287225240008931806e-10,
    -5.5645956134363321147e-11,
    1.1975935546366981004e-11,
    -4.168978225183863504e-15,
    -1.094064042788459441e-12,
    4.6622399463901357463e-13,
    -9.9051057639069059784e-14,
    1.8931876768373514506e-17,
    8.8592218725911272618e-15,
    -3.7378203980464054531e-15,
    7.8688336390351552577e-16,
    -9.0000273957412111661e-20,
    -6.9288812293476717204e-17,
    2.9020384270164783353e-17,
    -6.0678546968108768855e-18,
    4.4721207297968528241e-22,
    5.2794461444497852923e-19,
    -2.1988112334857319582e-19,
    4.5732827721348787438e-20,
    -2.3035862647067296399e-24,
    -3.9416155864709730329e-21,
    1.6343373741206338087e-21,
    -3.3849621468729403813e-22,
    1.2197072676409612048e-26,
    2.895185681637641629e-23,
    -1.1961217839812553057e-23,
    2.4688515721838723729e-24,
    -6.5950439126685207405e-29,
    -2.0983302479401646531e-25,
    8.6431837467669507198e-26,
    -1.7788994965494413156e-26,
    3.6246038842334761202e-31,
    1.5039290112462559038e-27,
    -6.179216599631512306e-28,
    1.2687071695353008921e-28,
    -2.0181764925940543004e-33,
    -1.0677685550184005122e-29,
    4.3777345887326872821e-30,
    -8.9697104698214400193e-31,
    1.1357798359190501845e-35};

inline constexpr std::array<double, 54> kTemmeC3 = {
    6.4943415637860082305e-4,
    2.2947209362139917695e-4,
    -4.6918949439525571213e-4,
    2.6772063206283885296e-4,
    -7.5618016718839764107e-5,
    -2.3965051138672966519e-7,
    1.1082654115347302361e-5,
    -5.6749528269915965675e-6,
    1.4230900732435883915e-6,
    -2.7861080291528142241e-11,
    -1.695840409193027729e-7,
    8.0994649053880823634e-8,
    -1.9111168485973654061e-8,
    2.3928620439808117969e-12,
    2.0620131815488798437e-9,
    -9.4604966618551321738e-10,
    2.1541049775774907838e-10,
    -1.388823336813903046e-14,
    -2.1894761681963939406e-11,
    9.7909989511716851257e-12,
    -2.1782191880180962115e-12,
    6.2088195734079014258e-17,
    2.126978363279736977e-13,
    -9.3446887915174333313e-14,
    2.0453671226782849325e-14,
    -2.5826079040349502133e-19,
    -1.9405297673344544368e-15,
    8.4159792904848155204e-16,
    -1.8200430439538225214e-16,
    1.0735443641247309963e-21,
    1.689682831525283303e-17,
    -7.2561117469421474703e-18,
    1.5547292746622027522e-18,
    -4.6059947522752389031e-24,
    -1.4191358137761749021e-19,
    6.0470664983778247402e-20,
    -1.2861734793467811034e-20,
    2.0623332993667593883e-26,
    1.1581664088463060363e-21,
    -4.9041090850680033947e-22,
    1.0368500228833457249e-22,
    -9.6283030858206998766e-29,
    -9.2332069509502897566e-24,
    3.8894380157947713771e-24,
    -8.1825279743049132908e-25,
    4.6594706840885702236e-31,
    7.2191938364343847819e-26,
    -3.0278190809439200801e-26,
    6.3432867772108205168e-27,
    -2.3216437878153589007e-33,
    -5.5525994278234654396e-28,
    2.3202009802052538752e-28,
    -4.8434917755697286782e-29,
    1.184169966337504142e-35};

inline constexpr std::array<double, 52> kTemmeC4 = {
    -8.618882909167116986e-4,
    7.8403922172006662747e-4,
    -2.9907248030319017973e-4,
    -1.4638452578843418178e-6,
    6.6414982154651221867e-5,
    -3.9683650471794346644e-5,
    1.1375726970678419098e-5,
    2.5074972262375328017e-10,
    -1.6954149536558306015e-6,
    8.9075075322053096888e-7,
    -2.2929348340008048706e-7,
    2.956794137544049047e-11,
    2.886582974270878363e-8,
    -1.4189739437803219389e-8,
    3.4463580499464897066e-9,
    -2.3024517174528067132e-13,
    -3.9409233028046405275e-10,
    1.8602338968504501913e-10,
    -4.3563230050566180438e-11,
    1.2786001016296231266e-15,
    4.679275026657919462e-12,
    -2.1492464706134828541e-12,
    4.9088156148096521632e-13,
    -6.338591484891560326e-18,
    -5.0453320690800943573e-14,
    2.2722958222901285924e-14,
    -5.0960826084724015419e-15,
    3.0552097557171354189e-20,
    5.069021676310551565e-16,
    -2.2493836956481809763e-16,
    4.9751114221314181119e-17,
    -1.4903016393517330709e-22,
    -4.825045774400423386e-18,
    2.1164667685646582312e-18,
    -4.6302113287492479058e-19,
    7.474753874999949141e-25,
    4.4010227568051897675e-20,
    -1.9125986486817927331e-20,
    4.1473922063767277139e-21,
    -3.8639847311166084773e-27,
    -3.8779411308837221379e-22,
    1.6724560022121335005e-22,
    -3.6003075686751608621e-23,
    2.0511489923951791853e-29,
    3.3208256584002747774e-24,
    -1.4230735499840399113e-24,
    3.0447747896532157976e-25,
    -1.1123835124213481795e-31,
    -2.7762975823284607544e-26,
    1.1833016389085907775e-26,
    -2.5186139864898056158e-27,
    6.1350473103761585533e-34};

inline constexpr std::array<double, 50> kTemmeC5 = {
    -3.3679855336635815031e-4,
    -6.9728137583658577743e-5,
    2.7727532449593920787e-4,
    -1.99325705161888477e-4,
    6.7977804779372078388e-5,
    1.4190629206439670148e-7,
    -1.3594048189768693278e-5,
    8.0184702563342015397e-6,
    -2.2914811765080951704e-6,
    -3.2524735512984539517e-10,
    3.4652846491085264956e-7,
    -1.8447187191171343277e-7,
    4.8240967037894180756e-8,
    -1.7989466721743515303e-14,
    -6.3061945000135234352e-9,
    3.1624176287745679377e-9,
    -7.84092425369742929e-10,
    5.1926791652540407238e-15,
    9.3589442423067835846e-11,
    -4.513426216163278231e-11,
    1.0799129993116827041e-11,
    -3.6618867126852520109e-17,
    -1.210902069055154988e-12,
    5.6807435849905643329e-13,
    -1.3249659916340829088e-13,
    1.898724076428407552e-19,
    1.4193390236794701885e-14,
    -6.5232147014246967231e-15,
    1.492524263620288524e-15,
    -8.8003894587323696868e-22,
    -1.5440222523033821908e-16,
    6.9843413502272340916e-17,
    -1.5742663876248805923e-17,
    3.9329863814277488363e-24,
    1.5843727014454443902e-18,
    -7.0766155327168528711e-19,
    1.5760057594727923073e-19,
    -1.7631877362613745509e-26,
    -1.5511791464815588559e-20,
    6.8570698947733088532e-21,
    -1.5121272010766691289e-21,
    8.0919587433728589289e-29,
    1.4611649092223778084e-22,
    -6.4038311307738676638e-23,
    1.4005952052196815439e-23,
    -3.8310640291751966924e-31,
    -1.3326238178606601508e-24,
    5.7981781168281205074e-25,
    -1.2593062649450632899e-25,
    1.8710159014066911061e-33};

inline constexpr std::array<double, 48> kTemmeC6 = {
    5.3130793646399222317e-4,
    -5.9216643735369388286e-4,
    2.7087820967180448277e-4,
    7.9023532326603278721e-7,
    -8.1539693675619687509e-5,
    5.61168275310624965e-5,
    -1.8329116582843375567e-5,
    -3.0796134506033047826e-9,
    3.4651553688036090867e-6,
    -2.0291327396058603727e-6,
    5.7887928631490037089e-7,
    2.3386306738266569893e-13,
    -8.8286007463304835251e-8,
    4.7435958880408127803e-8,
    -1.2545415020710382446e-8,
    8.6496488580102924713e-14,
    1.6846058979264062708e-9,
    -8.5754928235775947286e-10,
    2.1598224929232125188e-10,
    -7.6132305204761538683e-16,
    -2.6639822008536143714e-11,
    1.3065700536611057295e-11,
    -3.1799163902367976682e-12,
    4.7109761213674314702e-18,
    3.6902800842763467096e-13,
    -1.7612674046201425388e-13,
    4.1790667860514779799e-14,
    -2.5344679379178805858e-20,
    -4.6320659420016045502e-15,
    2.1651454859646428794e-15,
    -5.0376517640976216083e-16,
    1.2888678687796970421e-22,
    5.3868666989630649802e-17,
    -2.4768152387614877404e-17,
    5.6736203330967770817e-18,
    -6.4764286225656309268e-25,
    -5.8944804650181065485e-19,
    2.6742571406222054894e-19,
    -6.0485085647057387962e-20,
    3.2922941808752547756e-27,
    6.1368924428422729856e-21,
    -2.753647314989603366e-21,
    6.1626187589348379661e-22,
    -1.7101187545016142211e-29,
    -6.1300694556136538894e-23,
    2.7251436718195958021e-23,
    -6.0446699847278565766e-24,
    9.0913376977583457652e-32};

inline constexpr std::array<double, 46> kTemmeC7 = {
    3.4436760689237767125e-4,
    5.1717909082605921934e-5,
    -3.3493161081142236312e-4,
    2.8126951547632370227e-4,
    -1.0976582244684731024e-4,
    -1.2741009095484485379e-7,
    2.7744451511563644157e-5,
    -1.8263488805711332661e-5,
    5.7876949497350523989e-6,
    4.9387589339362703998e-10,
    -1.0595367014026042734e-6,
    6.1667143761104074786e-7,
    -1.7562973359060461938e-7,
    -1.2974473287015438707e-12,
    2.6954236062889659837e-8,
    -1.4578352908731270977e-8,
    3.8876459593861749981e-9,
    -3.8810022510194121255e-17,
    -5.3279941738772867209e-10,
    2.7437977643314845126e-10,
    -6.9957960920705679094e-11,
    2.589986387486848098e-17,
    8.8566890996696380884e-12,
    -4.4031688158713109516e-12,
    1.08655619470916539e-12,
    -2.0467988447416677476e-19,
    -1.296979442169293922e-13,
    6.2789220591477282154e-14,
    -1.5112948371679396275e-14,
    1.1708345473797399561e-21,
    1.7237979180178731772e-15,
    -8.1734903644952221482e-16,
    1.9290305005584791951e-16,
    -5.8787204794615552802e-24,
    -2.1220133079603799958e-17,
    9.8947514605277527216e-18,
    -2.2984330069367493279e-18,
    2.7899711522028406061e-26,
    2.4547571806180842159e-19,
    -1.1289954013035893786e-19,
    2.5882997293765362459e-20,
    -1.3031829653525849608e-28,
    -2.6972306827890278809e-21,
    1.2263146534958840449e-21,
    -2.7805481024911126988e-22,
    6.1354125374050810968e-31};

inline constexpr std::array<double, 44> kTemmeC8 = {
    -6.5262391859530941892e-4,
    8.3949872067208727999e-4,
    -4.3829709854172100506e-4,
    -6.9690914584205519714e-7,
    1.6644846642067547837e-4,
    -1.2783517679769218585e-4,
    4.6299532636913042906e-5,
    4.5579098679227077116e-9,
    -1.0595271125805195472e-5,
    6.7833429048651666227e-6,
    -2.1075476666258804247e-6,
    -1.7213731432817144999e-11,
    3.7735877416110979338e-7,
    -2.1867506700122866558e-7,
    6.2202288040189269058e-8,
    6.5977038267330006134e-16,
    -9.5903864974256857713e-9,
    5.2132144922808077659e-9,
    -1.3991589583935708555e-9,
    5.3820589990605749639e-16,
    1.9484714275467745265e-10,
    -1.0127287556389681652e-10,
    2.6077347197254925765e-11,
    -5.0904186999932992164e-18,
    -3.3721464474854591792e-12,
    1.6953089140808567387e-12,
    -4.2316254586191542305e-13,
    3.3823327480704693481e-20,
    5.1713936936112108465e-14,
    -2.5337819883238846196e-14,
    6.1728975516252814541e-15,
    -1.9332893057353022337e-22,
    -7.2148452110218903249e-16,
    3.4631629965219340828e-16,
    -8.2743587952294203369e-17,
    1.0287761526532827883e-24,
    9.3280772647196417645e-18,
    -4.403082056306673146e-18,
    1.0353198899734754634e-18,
    -5.3242041737027781717e-27,
    -1.1328368854667890089e-19,
    5.2731530047481400984e-20,
    -1.2234411640277946682e-20,
    2.7506555271353701458e-29};

inline constexpr std::array<double, 42> kTemmeC9 = {
    -5.9676129019274625012e-4,
    -7.2048954160200105591e-5,
    6.7823088376673283616e-4,
    -6.401475260262758451e-4,
    2.7750107634328704499e-4,
    1.8197008380465151046e-7,
    -8.4795071170685031824e-5,
    6.1051920825015310176e-5,
    -2.1073920183404862408e-5,
    -8.8585890141255993892e-10,
    4.5284535953805377111e-6,
    -2.8427815022504407938e-6,
    8.7082341778646411676e-7,
    3.6886101871706965492e-12,
    -1.5344695190702061038e-7,
    8.8624667787906949757e-8,
    -2.5184812301826817334e-8,
    -1.0225912098215092431e-14,
    3.8969470758154776713e-9,
    -2.1267304792235634729e-9,
    5.7370135528051384735e-10,
    -1.8877498501697115467e-19,
    -8.0931538694657865831e-11,
    4.238272328344919949e-11,
    -1.1002224534207725654e-11,
    2.3327607706802834382e-19,
    1.4479903729175772213e-12,
    -7.3479677873831415898e-13,
    1.8518691673758748453e-13,
    -1.988756846896682514e-21,
    -2.3087505489510440861e-14,
    1.1428437899379254698e-14,
    -2.8132819318714040984e-15,
    1.220615571054639488e-23,
    3.3581078635784926862e-16,
    -1.6291403614037366651e-16,
    3.934215546790317312e-17,
    -6.5168104785752292968e-26,
    -4.531347570714144878e-18,
    2.1619927322526504199e-18,
    -5.138452867740082982e-19,
    3.2504289894608846883e-28};

inline constexpr std::array<double, 40> kTemmeC10 = {
    1.3324454494800656371e-3,
    -1.9144384985654775265e-3,
    1.108936913459663734e-3,
    9.9324041226422989674e-7,
    -5.0874501293093198985e-4,
    4.2735056665392884328e-4,
    -1.6858853767910798803e-4,
    -8.1301893922784997964e-9,
    4.5284402370562147135e-5,
    -3.1270536747817340258e-5,
    1.0449868285303380083e-5,
    4.843522626568092556e-11,
    -2.1482565873456257999e-6,
    1.3293697010974920245e-6,
    -4.0295693092101029016e-7,
    -1.7567877666323290649e-13,
    7.0145043163668257116e-8,
    -4.0407877349994829791e-8,
    1.1474026743371963451e-8,
    3.964274685356394248e-18,
    -1.7804938269892713751e-9,
    9.7480262548731646481e-10,
    -2.6405338676507615983e-10,
    5.7948751634037600958e-18,
    3.7647749553543836366e-11,
    -1.9839512967578279439e-11,
    5.1852336567481386247e-12,
    -5.7491625582694052484e-20,
    -6.9262516384328144034e-13,
    3.5428157453708071488e-13,
    -9.0025021750003742266e-14,
    4.0187136062640713494e-22,
    1.1417566731145617623e-14,
    -5.7019912628703856951e-15,
    1.4163175964301619824e-15,
    -2.406325624915245333e-24,
    -1.7219120765700572905e-16,
    8.4317716545625549574e-17,
    -2.0553811468484574282e-17,
    1.3300504248300989029e-26};

inline constexpr std::array<double, 38> kTemmeC11 = {
    1.5797276607308349591e-3,
    1.625162627839158169e-4,
    -2.0633421035543276265e-3,
    2.1389686185689098154e-3,
    -1.0108559391263003171e-3,
    -3.991270552991920091e-7,
    3.6235025084764691165e-4,
    -2.8143901463712154068e-4,
    1.0449513336495887231e-4,
    2.1211418491830297479e-9,
    -2.5779417251947841779e-5,
    1.7281818956040462545e-5,
    -5.6413773872904281567e-6,
    -1.1024320105776174244e-11,
    1.1223224418895174684e-6,
    -6.8693396379526735024e-7,
    2.0653236975414887295e-7,
    4.6714772409838506909e-14,
    -3.5609886164949055408e-8,
    2.0470855345905963354e-8,
    -5.8091738633283357572e-9,
    -1.332821287582864822e-16,
    9.0354604391335132948e-10,
    -4.9598782517330834036e-10,
    1.3481607129399748969e-10,
    -1.67037849865939511e-21,
    -1.9393504903925578874e-11,
    1.0274165666419909692e-11,
    -2.7007506301261849021e-12,
    3.3260696116585924208e-21,
    3.6536213725349779691e-13,
    -1.8816571169948132929e-13,
    4.815479814520388038e-14,
    -2.9944281228117722648e-23,
    -6.1988834866621078956e-15,
    3.1197555123181922567e-15,
    -7.8104483500177163055e-16,
    1.9380997739825407789e-25};

inline constexpr std::array<double, 36> kTemmeC12 = {
    -4.0725121195140166473e-3,
    6.4033628338080697948e-3,
    -4.0410161081676617747e-3,
    -2.1837328028662329817e-6,
    2.1740441801254638629e-3,
    -1.9700440518418891537e-3,
    8.3595469747962457767e-4,
    1.944544756710965479e-8,
    -2.5779387120421696347e-4,
    1.9009987368139303513e-4,
    -6.7696499937438964818e-5,
    -1.4440629666426572397e-10,
    1.5712512518742269023e-5,
    -1.030400874477689315e-5,
    3.3045177674013870497e-6,
    7.9829760242325710909e-13,
    -6.4097794149313003607e-7,
    3.8894624761300055727e-7,
    -1.1618347644948869323e-7,
    -2.8168086305964422517e-15,
    1.9878012911297092809e-8,
    -1.1407719956357510677e-8,
    3.2355857064185554522e-9,
    4.1759462466484877749e-20,
    -5.0423112718105824321e-10,
    2.774024728617071708e-10,
    -7.5621017616681377007e-11,
    9.6044764345340991125e-20,
    1.0960864115705616138e-11,
    -5.8331370619087126133e-12,
    1.5409535404888976002e-12,
    -9.860595283084348217e-22,
    -2.107620385351855359e-13,
    1.0919144292652915658e-13,
    -2.8117614059129150572e-14,
    7.1599295091138360857e-24};

}  // namespace epstein::detail
