"""
Komut satiri: alt komutlar ve cikis kodlari
"""
import json

import pytest

from main import main


def _data(tmp_path, name, lines):
    path = tmp_path / name
    path.write_text("\n".join(lines) + "\n")
    return str(path)


def test_test_komutu_json(tmp_path, rng, capsys):
    path = _data(tmp_path, "x.csv", [f"{v:.8f}" for v in rng.laplace(size=40)])
    code = main(["test", path, "--test", "KS", "--reps", "1000", "--workers", "1", "--json"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["n"] == 40
    assert report["test"] == "KS"


def test_sayi_olmayan_veri_cikis_3(tmp_path):
    path = _data(tmp_path, "bad.csv", ["1", "x", "3", "4"])
    assert main(["test", path, "--reps", "1000"]) == 3


def test_sabit_veri_cikis_3(tmp_path):
    path = _data(tmp_path, "flat.csv", ["2", "2", "2", "2"])
    assert main(["test", path, "--reps", "1000"]) == 3


def test_negatif_fiyat_cikis_3(tmp_path):
    path = _data(tmp_path, "p.csv", ["10", "11", "-1", "12"])
    assert main(["test", path, "--transform", "log-returns", "--reps", "1000"]) == 3


def test_az_replikasyon_cikis_2(tmp_path):
    path = _data(tmp_path, "x.csv", ["0.1", "-0.5", "1.2", "0.3"])
    assert main(["test", path, "--reps", "10"]) == 2


def test_bilinmeyen_test_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["test", "x.csv", "--test", "NOPE"])
    assert exc.value.code == 2


def test_study_seed_zorunlu():
    with pytest.raises(SystemExit) as exc:
        main(["study", "--ns", "20"])
    assert exc.value.code == 2


def test_calibrate_gecersiz_alpha_cikis_2(tmp_path):
    code = main(["calibrate", "--seed", "1", "--ns", "20", "--alphas", "0.2", "--tests", "KS",
                 "--reps", "1000", "--out-dir", str(tmp_path)])
    assert code == 2


def test_calibrate_ve_power(tmp_path, capsys):
    common = ["--seed", "3", "--ns", "20", "--alphas", "0.05", "--tests", "KS,AD",
              "--workers", "1", "--chunk-size", "500", "--out-dir", str(tmp_path)]
    assert main(["calibrate", *common, "--reps", "1000"]) == 0
    assert (tmp_path / "critical_values.csv").is_file()

    code = main(["power", *common, "--submodels", "ALp", "--case", "20",
                 "--calib-reps", "1000", "--reps", "1000"])
    assert code == 0
    out = capsys.readouterr().out
    assert "ALp" in out and "case=20" in out
    assert (tmp_path / "power.csv").read_text().count("\n") == 1 + 2


def test_report_yayinlanmis_tablo(published_power_path, tmp_path, capsys):
    out_csv = tmp_path / "report.csv"
    code = main(["report", "--power", str(published_power_path), "--grouping", "All", "--top", "3",
                 "--out", str(out_csv)])
    assert code == 0
    printed = capsys.readouterr().out
    assert "n=20" in printed and "AP_y 47.0" in printed
    assert out_csv.read_text().startswith("grouping,n,alpha,test,avg_power,gap,rank")


def test_curves_yayinlanmis_tabloda_cikis_2(published_power_path):
    assert main(["curves", "--power", str(published_power_path)]) == 2


def test_study_kucuk(tmp_path, capsys):
    code = main(["study", "--seed", "5", "--ns", "20", "--alphas", "0.05", "--tests", "KS",
                 "--submodels", "ALp", "--calib-reps", "1000", "--power-reps", "1000",
                 "--workers", "1", "--chunk-size", "500", "--out-dir", str(tmp_path)])
    assert code == 0
    assert (tmp_path / "run_metadata.json").is_file()
    assert main(["curves", "--power", str(tmp_path / "power.csv")]) == 0
    assert "KS,20,0.05,20," in capsys.readouterr().out
