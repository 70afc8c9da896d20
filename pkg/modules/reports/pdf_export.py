import logging
from datetime import datetime
from pathlib import Path

from reportlab.lib import colors
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import getSampleStyleSheet
from reportlab.lib.units import cm
from reportlab.pdfgen import canvas
from reportlab.platypus import Paragraph, Table, TableStyle

logger = logging.getLogger(__name__)

ROWS_PER_PAGE = 38

STATUS_COLORS = {
    "OK": colors.white,
    "CONFLICT": colors.lightyellow,
    "DISPUTED": colors.HexColor("#d9e7f5"),
    "GAP": colors.HexColor("#e8dff2"),
    "MISMATCH": colors.HexColor("#f4c7c3"),
    "UNCOVERED": colors.HexColor("#f4c7c3"),
    "SKIPPED": colors.whitesmoke,
    "TIGHT": colors.lightyellow,
    "EXCEEDS": colors.HexColor("#f4c7c3"),
}


def _table_style(rows, status_column):
    style = [
        ('BACKGROUND', (0, 0), (-1, 0), colors.lightgrey),
        ('TEXTCOLOR', (0, 0), (-1, 0), colors.black),
        ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
        ('FONTNAME', (0, 1), (-1, -1), 'Helvetica'),
        ('FONTSIZE', (0, 0), (-1, -1), 8),
        ('ALIGN', (0, 0), (-1, -1), 'CENTER'),
        ('GRID', (0, 0), (-1, -1), 0.5, colors.grey),
        ('BOTTOMPADDING', (0, 0), (-1, -1), 2),
        ('TOPPADDING', (0, 0), (-1, -1), 2),
    ]
    if status_column is not None:
        for i, row in enumerate(rows, start=1):
            color = STATUS_COLORS.get(str(row[status_column]))
            if color is not None and color != colors.white:
                style.append(('BACKGROUND', (0, i), (-1, i), color))
    return TableStyle(style)


def _draw_header(pdf, title, page, pages):
    page_width, page_height = A4
    pdf.setFont("Helvetica-Bold", 14)
    title_width = pdf.stringWidth(title, "Helvetica-Bold", 14)
    pdf.drawString((page_width - title_width) / 2, page_height - 2 * cm, title)
    pdf.setFont("Helvetica", 8)
    pdf.drawString(1.5 * cm, page_height - 1 * cm, "sedn-lab v1")
    pdf.drawRightString(page_width - 1.5 * cm, page_height - 1 * cm,
                        f"Date: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    pdf.drawRightString(page_width - 1.5 * cm, 1 * cm, f"Page {page} of {pages}")


def create_table_pdf(file_path, title, header, rows, summary_lines=(), status_column=None):
    """
    Write a paginated A4 table report.

    Args:
        file_path: Where to save the PDF
        title: Heading printed on every page
        header: Column names
        rows: Table rows (lists of printable values)
        summary_lines: Text paragraphs placed under the table on the last page
        status_column: Index of a column whose value selects the row shading

    Returns:
        Path of the written file
    """
    file_path = Path(file_path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    page_width, page_height = A4
    styles = getSampleStyleSheet()
    rows = [[str(value) for value in row] for row in rows]
    chunks = [rows[i:i + ROWS_PER_PAGE] for i in range(0, len(rows), ROWS_PER_PAGE)] or [[]]

    pdf = canvas.Canvas(str(file_path), pagesize=A4)
    pdf.setTitle(title)
    for page, chunk in enumerate(chunks, start=1):
        _draw_header(pdf, title, page, len(chunks))
        top = page_height - 2.8 * cm
        table = Table([list(header)] + chunk, repeatRows=1)
        table.setStyle(_table_style(chunk, status_column))
        _, table_height = table.wrapOn(pdf, page_width - 3 * cm, top)
        table.drawOn(pdf, 1.5 * cm, top - table_height)

        if page == len(chunks):
            y = top - table_height - 0.6 * cm
            for line in summary_lines:
                paragraph = Paragraph(line, styles['Normal'])
                _, height = paragraph.wrapOn(pdf, page_width - 3 * cm, y)
                y -= height
                paragraph.drawOn(pdf, 1.5 * cm, y)
                y -= 0.2 * cm
        pdf.showPage()
    pdf.save()
    logger.info("[PDF] %d rows written to %s", len(rows), file_path)
    return file_path
