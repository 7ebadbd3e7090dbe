class MagilabError(Exception):
    """Базовая ошибка библиотеки"""


class GraphError(MagilabError, ValueError):
    """Некорректный граф или параметры семейства"""


class DisconnectedGraphError(GraphError):
    """Операция требует связного графа"""


class LabelingError(MagilabError, ValueError):
    """Разметка не согласована с графом"""


class PreconditionError(LabelingError):
    """Разметка не удовлетворяет условию преобразования"""


class BudgetExceededError(MagilabError):
    """Пространство поиска превышает заданный бюджет"""

    def __init__(self, label_count: int, budget: int):
        self.label_count = label_count
        self.budget = budget
        super().__init__(
            f"Число меток |V|+|E|={label_count} превышает бюджет поиска {budget}"
        )


class SearchIntegrityError(MagilabError):
    """Найденная разметка не прошла повторную проверку"""
